#include "atlas/hadron.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "csv.hpp"
#include "json.hpp"

namespace atlas::hadron {

QuarkFlavor QuarkFlavor::conjugate() const {
  QuarkFlavor anti = *this;
  anti.antiparticle = !antiparticle;
  anti.name = antiparticle ? name.substr(0, name.size() - 3) : name + "bar";
  anti.baryon_number = -baryon_number;
  anti.charge = -charge;
  anti.hypercharge = -hypercharge;
  anti.isospin3 = -isospin3;
  anti.strangeness = -strangeness;
  return anti;
}

FlavorTable FlavorTable::load(const std::filesystem::path& csv_path) {
  FlavorTable table;
  for (const auto& row : csv::load(csv_path, "name,B,Q,Y,I,I3,S").rows) {
    QuarkFlavor f;
    f.name = row[0];
    f.baryon_number = Rational::parse(row[1]);
    f.charge = Rational::parse(row[2]);
    f.hypercharge = Rational::parse(row[3]);
    const Rational i = Rational::parse(row[4]);
    const Rational i3 = Rational::parse(row[5]);
    f.isospin = HalfInt::from_fraction(int(i.num()), int(i.den()));
    f.isospin3 = HalfInt::from_fraction(int(i3.num()), int(i3.den()));
    f.strangeness = std::stoi(row[6]);
    f.antiparticle = f.name.size() > 3 && f.name.ends_with("bar");
    table.flavors_.push_back(std::move(f));
  }

  for (const auto& f : table.flavors_) {
    if (f.charge - Rational(f.isospin3) - f.hypercharge / 2 != Rational(0))
      throw std::runtime_error("quark table: row " + f.name +
                               " violates Q = I3 + Y/2");
    if (f.antiparticle) {
      const auto& base = table.flavor(f.name.substr(0, f.name.size() - 3));
      const QuarkFlavor expect = base.conjugate();
      if (f.baryon_number != expect.baryon_number || f.charge != expect.charge ||
          f.hypercharge != expect.hypercharge || f.isospin != expect.isospin ||
          f.isospin3 != expect.isospin3 || f.strangeness != expect.strangeness)
        throw std::runtime_error("quark table: row " + f.name +
                                 " is not the conjugate of " + base.name);
    }
  }
  return table;
}

const QuarkFlavor& FlavorTable::flavor(std::string_view name) const {
  for (const auto& f : flavors_)
    if (f.name == name) return f;
  throw std::out_of_range("unknown quark flavor \"" + std::string(name) + "\"");
}

HadronComposition HadronComposition::of(std::vector<QuarkFlavor> constituents) {
  int quarks = 0, antiquarks = 0;
  for (const auto& f : constituents) (f.antiparticle ? antiquarks : quarks)++;
  if (quarks == 3 && antiquarks == 0)
    return {HadronKind::Baryon, std::move(constituents)};
  if (quarks == 0 && antiquarks == 3)
    return {HadronKind::AntiBaryon, std::move(constituents)};
  if (quarks == 1 && antiquarks == 1) {
    // canonical order: quark first, antiquark second
    if (constituents.front().antiparticle)
      std::swap(constituents.front(), constituents.back());
    return {HadronKind::Meson, std::move(constituents)};
  }
  throw std::invalid_argument(
      "hadron must be qqq, three antiquarks, or one quark + one antiquark");
}

HadronComposition HadronComposition::parse(std::string_view text,
                                           const FlavorTable& table) {
  std::vector<QuarkFlavor> constituents;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) constituents.push_back(table.flavor(token));
  return of(std::move(constituents));
}

QuantumNumbers compose(const HadronComposition& c) {
  QuantumNumbers sum;
  for (const auto& f : c.constituents()) {
    sum.baryon_number += f.baryon_number;
    sum.charge += f.charge;
    sum.hypercharge += f.hypercharge;
    sum.isospin3 = sum.isospin3 + f.isospin3;
    sum.strangeness += f.strangeness;
  }
  return sum;
}

bool gmn_check(const QuantumNumbers& q) {
  return q.charge - Rational(q.isospin3) - q.hypercharge / 2 == Rational(0);
}

char color_letter(Color c) {
  switch (c) {
    case Color::R: return 'R';
    case Color::G: return 'G';
    case Color::B: return 'B';
  }
  throw std::logic_error("unknown color");
}

std::vector<ColorTerm> color_wavefunction(const HadronComposition& c) {
  std::vector<ColorTerm> terms;
  if (c.kind() == HadronKind::Meson) {
    for (Color col : {Color::R, Color::G, Color::B})
      terms.push_back({+1,
                       {{c.constituents()[0].name, col, false},
                        {c.constituents()[1].name, col, true}}});
    return terms;
  }

  // Antisymmetric combination: flavor slots stay in the given order, colors
  // run over the permutations of (R,G,B) with the permutation's sign.
  static constexpr std::array<std::array<Color, 3>, 6> kPerms = {{
      {Color::R, Color::G, Color::B},
      {Color::G, Color::B, Color::R},
      {Color::B, Color::R, Color::G},
      {Color::R, Color::B, Color::G},
      {Color::B, Color::G, Color::R},
      {Color::G, Color::R, Color::B},
  }};
  const bool anti = c.kind() == HadronKind::AntiBaryon;
  for (std::size_t p = 0; p < kPerms.size(); ++p) {
    ColorTerm term;
    term.coefficient = p < 3 ? +1 : -1;
    for (int slot = 0; slot < 3; ++slot)
      term.factors.push_back({c.constituents()[slot].name, kPerms[p][slot], anti});
    terms.push_back(std::move(term));
  }
  return terms;
}

std::string color_term_str(const ColorTerm& term) {
  std::string out = term.coefficient > 0 ? "+" : "-";
  for (const auto& f : term.factors) {
    out += ' ';
    out += f.flavor;
    out += '_';
    out += color_letter(f.color);
    if (f.anti) out += "bar";
  }
  return out;
}

long long gluon_count(int n_colors) {
  if (n_colors < 1)
    throw std::invalid_argument("gluon_count: need at least one color");
  return static_cast<long long>(n_colors) * n_colors - 1;
}

std::vector<MultipletMember> parse_multiplet_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array())
    throw std::invalid_argument("multiplet file: expected a JSON array");
  std::vector<MultipletMember> members;
  for (const auto& item : doc) {
    MultipletMember m;
    m.label = item.at("label").get<std::string>();
    m.charge = Rational::parse(item.at("Q").get<std::string>());
    m.strangeness = item.at("S").get<int>();
    m.spin = HalfInt::from_twice(item.at("two_spin").get<int>());
    m.parity = item.at("parity").get<int>();
    if (m.parity != 1 && m.parity != -1)
      throw std::invalid_argument("multiplet file: parity must be +1 or -1");
    if (item.contains("mass")) m.mass = item.at("mass").get<double>();
    members.push_back(std::move(m));
  }
  return members;
}

std::vector<MultipletMember> load_multiplet_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open multiplet file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_multiplet_json(buffer.str());
}

namespace {

/// Splits one strangeness layer into maximal isospin multiplets.  The member
/// charges are recentred so the profile is symmetric about I3 = 0; the count
/// of multiplets with isospin I is profile(I) - profile(I+1).
std::vector<int> layer_multiplet_sizes(const std::vector<Rational>& charges) {
  const auto [qmin, qmax] = std::minmax_element(charges.begin(), charges.end());
  const Rational center = (*qmin + *qmax) / 2;
  std::map<long long, int> profile;  // 2*I3 -> count
  for (const auto& q : charges) {
    const Rational two_i3 = (q - center) * 2;
    if (!two_i3.is_integer())
      throw std::invalid_argument("charges within a layer must step by one unit");
    ++profile[two_i3.num()];
  }
  const auto count_at = [&](long long two_i3) {
    const auto it = profile.find(two_i3);
    return it == profile.end() ? 0 : it->second;
  };

  std::vector<int> sizes;
  int covered = 0;
  for (long long two_i = profile.rbegin()->first; two_i >= 0; two_i -= 2) {
    const int n = count_at(two_i) - count_at(two_i + 2);
    if (n < 0)
      throw std::invalid_argument("layer charges do not form isospin multiplets");
    for (int k = 0; k < n; ++k) {
      sizes.push_back(int(two_i) + 1);
      covered += int(two_i) + 1;
    }
  }
  if (covered != int(charges.size()))
    throw std::invalid_argument("layer charges do not form isospin multiplets");
  return sizes;
}

struct Candidate {
  std::string notation;
  std::multiset<int> sizes;
};

std::vector<Candidate> candidate_irreps() {
  const auto sizes_of = [](const rep::Su3Irrep& irrep) {
    std::multiset<int> sizes;
    for (const auto& m : rep::su3_su2_content(irrep)) sizes.insert(int(m.dim()));
    return sizes;
  };
  std::vector<Candidate> out;
  out.push_back({"1 (singlet)", sizes_of({0, 0})});
  out.push_back({"8 (octet)", sizes_of({1, 1})});
  out.push_back({"10 (decuplet)", sizes_of({3, 0})});
  out.push_back({"10* (anti-decuplet)", sizes_of({0, 3})});
  auto nonet = sizes_of({1, 1});
  nonet.insert(1);
  out.push_back({"8+1 (nonet)", std::move(nonet)});
  return out;
}

}  // namespace

Classification classify_multiplet(const std::vector<MultipletMember>& members) {
  if (members.empty())
    throw std::invalid_argument("classify_multiplet: no members given");
  for (const auto& m : members)
    if (m.spin != members.front().spin || m.parity != members.front().parity)
      throw std::invalid_argument("classify_multiplet: members must share spin "
                                  "and parity (offending member: " + m.label + ")");

  std::map<int, std::vector<Rational>> layers;  // strangeness -> charges
  for (const auto& m : members) layers[m.strangeness].push_back(m.charge);

  Classification result;
  result.spin = members.front().spin;
  result.parity = members.front().parity;
  for (const auto& [s, charges] : layers)
    for (int size : layer_multiplet_sizes(charges))
      result.sizes.push_back(size);
  std::sort(result.sizes.rbegin(), result.sizes.rend());

  const std::multiset<int> observed(result.sizes.begin(), result.sizes.end());
  for (const auto& candidate : candidate_irreps())
    if (candidate.sizes == observed) result.matches.push_back(candidate.notation);
  if (result.matches.empty())
    throw std::domain_error("no candidate irrep matches multiplet sizes");
  return result;
}

EkaPrediction eka_predict(const rep::Su3Irrep& irrep,
                          const std::vector<MultipletMember>& members) {
  if (members.empty())
    throw std::invalid_argument("eka_predict: no members given");

  // Expected (2*I3, 3*Y) slots of the irrep.
  std::multiset<std::pair<int, int>> slots;
  for (const auto& m : rep::su3_isospin_layers(irrep)) {
    const int two_i = m.isospin.j().twice();
    for (int two_i3 = -two_i; two_i3 <= two_i; two_i3 += 2)
      slots.insert({two_i3, m.three_y});
  }

  // Occupied slots: Y = B + S with B read off the spin statistics,
  // I3 = Q - Y/2.
  std::multiset<std::pair<int, int>> occupied;
  std::map<int, std::pair<double, int>> layer_mass;  // 3Y -> (sum, count)
  for (const auto& m : members) {
    const int baryon_number = m.spin.is_integer() ? 0 : 1;
    const Rational y = Rational(baryon_number) + Rational(m.strangeness);
    const Rational two_i3 = (m.charge - y / 2) * 2;
    const Rational three_y = y * 3;
    if (!two_i3.is_integer() || !three_y.is_integer())
      throw std::invalid_argument("member " + m.label +
                                  " has non-lattice quantum numbers");
    occupied.insert({int(two_i3.num()), int(three_y.num())});
    if (m.mass) {
      auto& [sum, count] = layer_mass[int(three_y.num())];
      sum += *m.mass;
      ++count;
    }
  }

  std::multiset<std::pair<int, int>> holes;
  std::set_difference(slots.begin(), slots.end(), occupied.begin(),
                      occupied.end(), std::inserter(holes, holes.begin()));
  std::multiset<std::pair<int, int>> extras;
  std::set_difference(occupied.begin(), occupied.end(), slots.begin(),
                      slots.end(), std::inserter(extras, extras.begin()));
  if (!extras.empty())
    throw std::invalid_argument("members do not fit the irrep's slots");
  if (holes.size() != 1)
    throw std::invalid_argument("expected exactly one empty slot, found " +
                                std::to_string(holes.size()));

  const auto [two_i3, three_y] = *holes.begin();
  EkaPrediction prediction;
  prediction.isospin3 = HalfInt::from_twice(two_i3);
  prediction.hypercharge = Rational(three_y, 3);
  prediction.charge = Rational(prediction.isospin3) + prediction.hypercharge / 2;
  const int baryon_number = members.front().spin.is_integer() ? 0 : 1;
  const Rational s = prediction.hypercharge - Rational(baryon_number);
  prediction.strangeness = int(s.num());  // integral for physical multiplets

  // Linear least-squares mass fit over hypercharge-layer means.
  if (layer_mass.size() >= 2) {
    double sy = 0, sm = 0, syy = 0, sym = 0;
    const double n = double(layer_mass.size());
    for (const auto& [ty, acc] : layer_mass) {
      const double y = ty / 3.0;
      const double mean = acc.first / acc.second;
      sy += y;
      sm += mean;
      syy += y * y;
      sym += y * mean;
    }
    const double slope = (n * sym - sy * sm) / (n * syy - sy * sy);
    const double intercept = (sm - slope * sy) / n;
    prediction.mass = intercept + slope * (three_y / 3.0);
  }
  return prediction;
}

NucleonDoublet heisenberg_doublet() {
  return {rep::Su2Irrep(HalfInt::from_twice(1)),
          {{{"proton", HalfInt::from_twice(1)},
            {"neutron", HalfInt::from_twice(-1)}}}};
}

}  // namespace atlas::hadron
