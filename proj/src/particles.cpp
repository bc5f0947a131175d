#include "atlas/particles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "csv.hpp"

namespace atlas::particles {

namespace {

std::optional<int> parse_optional_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stoi(s);
}

bool parse_bool(const std::string& s, const std::string& file) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::runtime_error(file + ": expected true/false, got \"" + s + "\"");
}

ElementStatus parse_status(const std::string& s) {
  if (s == "named") return ElementStatus::Named;
  if (s == "not_named") return ElementStatus::NotNamed;
  if (s == "not_observed") return ElementStatus::NotObserved;
  throw std::runtime_error("elements.csv: unknown status \"" + s + "\"");
}

ParticleClass parse_class(const std::string& s) {
  if (s == "fermion") return ParticleClass::Fermion;
  if (s == "gauge_boson") return ParticleClass::GaugeBoson;
  if (s == "higgs") return ParticleClass::Higgs;
  throw std::runtime_error("particles.csv: unknown class \"" + s + "\"");
}

double parse_range(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  return std::stod(s);
}

}  // namespace

std::string status_name(ElementStatus s) {
  switch (s) {
    case ElementStatus::Named: return "named";
    case ElementStatus::NotNamed: return "not_named";
    case ElementStatus::NotObserved: return "not_observed";
  }
  throw std::logic_error("unknown element status");
}

Registry Registry::load(const std::filesystem::path& data_dir) {
  Registry reg;

  for (const auto& row : csv::load(data_dir / "elements.csv",
                                   "Z,symbol,name,discovery_year,status").rows) {
    reg.elements_.push_back({std::stoi(row[0]), row[1], row[2],
                             parse_optional_int(row[3]), parse_status(row[4])});
  }

  for (const auto& row :
       csv::load(data_dir / "particles.csv",
                 "name,class,generation,two_spin,charge,massless,color_charged,"
                 "discovery_year,predicted_year").rows) {
    reg.particles_.push_back({row[0], parse_class(row[1]),
                              parse_optional_int(row[2]),
                              HalfInt::from_twice(std::stoi(row[3])),
                              Rational::parse(row[4]),
                              parse_bool(row[5], "particles.csv"),
                              parse_bool(row[6], "particles.csv"),
                              parse_optional_int(row[7]),
                              parse_optional_int(row[8])});
  }

  for (const auto& row :
       csv::load(data_dir / "interactions.csv",
                 "name,relative_strength,range_cm,quanta,concern,manifestation").rows) {
    reg.interactions_.push_back({row[0], std::stod(row[1]), parse_range(row[2]),
                                 csv::split(row[3], ';'), row[4], row[5]});
  }

  for (const auto& row :
       csv::load(data_dir / "superpartners.csv",
                 "particle,partner,two_spin_particle,two_spin_partner").rows) {
    reg.superpartners_.push_back({row[0], row[1],
                                  HalfInt::from_twice(std::stoi(row[2])),
                                  HalfInt::from_twice(std::stoi(row[3]))});
  }

  for (const auto& row :
       csv::load(data_dir / "element_counts.csv", "year,count").rows)
    reg.element_counts_[std::stoi(row[0])] = std::stoi(row[1]);

  reg.validate();
  return reg;
}

void Registry::validate() const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].z != int(i) + 1)
      throw std::runtime_error("elements.csv: rows must be consecutive in Z");

  for (const auto& p : particles_) {
    const bool spin_ok =
        (p.cls == ParticleClass::Fermion && p.spin.twice() == 1) ||
        (p.cls == ParticleClass::GaugeBoson &&
         (p.spin.twice() == 2 || (p.name == "graviton" && p.spin.twice() == 4))) ||
        (p.cls == ParticleClass::Higgs && p.spin.twice() == 0 &&
         p.charge.is_zero());
    if (!spin_ok)
      throw std::runtime_error("particles.csv: spin/class mismatch for " + p.name);
  }

  if (interactions_.size() != 4)
    throw std::runtime_error("interactions.csv: expected exactly 4 interactions");

  for (const auto& e : superpartners_) {
    const int gap = e.particle_spin.twice() - e.partner_spin.twice();
    if (gap != 1 && gap != -1)
      throw std::runtime_error("superpartners.csv: spins of " + e.particle +
                               " and " + e.partner + " must differ by 1/2");
  }

  int last = 0;
  for (const auto& [year, count] : element_counts_) {
    if (count < last)
      throw std::runtime_error("element_counts.csv: counts must be nondecreasing");
    last = count;
  }
}

const ElementRecord& Registry::element(int z) const {
  if (z < 1 || z > int(elements_.size()))
    throw std::out_of_range("element: Z out of range: " + std::to_string(z));
  return elements_[z - 1];
}

int Registry::elements_known(int year) const {
  const auto it = element_counts_.find(year);
  if (it == element_counts_.end())
    throw std::out_of_range("elements_known: year " + std::to_string(year) +
                            " is not tabulated");
  return it->second;
}

Census Registry::standard_model_census() const {
  Census census;
  for (const auto& p : particles_) {
    switch (p.cls) {
      case ParticleClass::Fermion:
        ++census.fermions;
        break;
      case ParticleClass::GaugeBoson:
        if (p.name == "graviton") {
          ++census.mediators_with_graviton;
        } else {
          // the gluon row stands for the color octet
          const int n = (p.name == "gluon") ? 8 : 1;
          census.sm_mediators += n;
          census.mediators_with_graviton += n;
        }
        break;
      case ParticleClass::Higgs:
        ++census.higgs;
        break;
    }
  }
  return census;
}

const SuperpartnerEntry& Registry::superpartner(const std::string& name) const {
  for (const auto& e : superpartners_)
    if (e.particle == name) return e;
  throw std::out_of_range("superpartner: unknown particle \"" + name + "\"");
}

const ParticleRecord& Registry::particle(const std::string& name) const {
  for (const auto& p : particles_)
    if (p.name == name) return p;
  throw std::out_of_range("particle: unknown name \"" + name + "\"");
}

}  // namespace atlas::particles
