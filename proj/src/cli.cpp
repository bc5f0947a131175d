#include "atlas/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "atlas/atomic.hpp"
#include "atlas/dataset.hpp"
#include "atlas/hadron.hpp"
#include "atlas/particles.hpp"
#include "atlas/repcore.hpp"

namespace atlas::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  return Format::Json;
}

struct Context {
  // resolved lazily; command callbacks fire inside CLI11's parse, after all
  // option values (including fallthrough ones) are in place
  const std::string* format_name = nullptr;
  std::string data_override;
  std::ostream* out = nullptr;

  Format format() const { return parse_format(*format_name); }
  std::filesystem::path data_dir() const { return resolve_data_dir(data_override); }
  particles::Registry registry() const { return particles::Registry::load(data_dir()); }
  hadron::FlavorTable flavors() const {
    return hadron::FlavorTable::load(data_dir() / "quarks.csv");
  }
  void emit_json(const ordered_json& j) const { *out << j.dump(2) << '\n'; }
};

std::string mass_str(double mass) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", mass);
  return buf;
}

double mass_rounded(double mass) { return std::round(mass * 10.0) / 10.0; }

// ---- table ---------------------------------------------------------------

atomic::Layout parse_layout(const std::string& name) {
  if (name == "madelung") return atomic::Layout::MadelungSkeleton;
  if (name == "so42") return atomic::Layout::So42;
  if (name == "scerri") return atomic::Layout::Scerri;
  return atomic::Layout::Conventional18;
}

void cmd_table(const Context& ctx, const std::string& layout, int zmax) {
  const auto registry = ctx.registry();
  const atomic::SymbolLookup symbol = [&registry](int z) -> std::string {
    if (z < 1 || z > int(registry.elements().size())) return {};
    return registry.element(z).symbol;
  };
  const atomic::TableGrid grid = atomic::build_table(parse_layout(layout), zmax);
  switch (ctx.format()) {
    case Format::Text: *ctx.out << atomic::render_text(grid, symbol); break;
    case Format::Csv: *ctx.out << atomic::render_csv(grid, symbol); break;
    case Format::Json: *ctx.out << atomic::render_json(grid, symbol); break;
  }
}

// ---- config ---------------------------------------------------------------

void cmd_config(const Context& ctx, int z, const std::string& rule_name) {
  const atomic::FillingRule rule = rule_name == "madelung"
                                       ? atomic::FillingRule::MADELUNG
                                       : (rule_name == "enl" ? atomic::FillingRule::ENL
                                                             : atomic::FillingRule::EN);
  const atomic::Configuration config = atomic::ground_configuration(z, rule);
  switch (ctx.format()) {
    case Format::Text:
      *ctx.out << config.str() << '\n';
      break;
    case Format::Csv: {
      *ctx.out << "n,l,shell,occupancy\n";
      for (const auto& e : config.entries)
        *ctx.out << e.shell.n << ',' << e.shell.l << ',' << e.shell.label() << ','
                 << e.occupancy << '\n';
      break;
    }
    case Format::Json: {
      ordered_json j{{"Z", z}, {"rule", rule_name}};
      auto& entries = j["configuration"] = ordered_json::array();
      for (const auto& e : config.entries)
        entries.push_back({{"n", e.shell.n},
                           {"l", e.shell.l},
                           {"shell", e.shell.label()},
                           {"occupancy", e.occupancy}});
      ctx.emit_json(j);
      break;
    }
  }
}

// ---- address --------------------------------------------------------------

void emit_address(const Context& ctx, int z, const atomic::Address& a, bool z_query) {
  switch (ctx.format()) {
    case Format::Text:
      if (z_query)
        *ctx.out << "n=" << a.n << " l=" << a.l << " 2j=" << a.j.twice()
                 << " 2mj=" << a.mj.twice() << '\n';
      else
        *ctx.out << "Z=" << z << '\n';
      break;
    case Format::Csv:
      *ctx.out << "Z,n,l,two_j,two_mj\n"
               << z << ',' << a.n << ',' << a.l << ',' << a.j.twice() << ','
               << a.mj.twice() << '\n';
      break;
    case Format::Json:
      ctx.emit_json({{"Z", z},
                     {"n", a.n},
                     {"l", a.l},
                     {"two_j", a.j.twice()},
                     {"two_mj", a.mj.twice()}});
      break;
  }
}

// ---- element / family / raregases ------------------------------------------

void cmd_element(const Context& ctx, int z) {
  const particles::ElementRecord rec = ctx.registry().element(z);
  const std::string year =
      rec.discovery_year ? std::to_string(*rec.discovery_year) : std::string{};
  switch (ctx.format()) {
    case Format::Text:
      *ctx.out << "Z=" << rec.z << " symbol=" << rec.symbol << " name=" << rec.name
               << " year=" << year << " status=" << particles::status_name(rec.status)
               << '\n';
      break;
    case Format::Csv:
      *ctx.out << "Z,symbol,name,discovery_year,status\n"
               << rec.z << ',' << rec.symbol << ',' << rec.name << ',' << year << ','
               << particles::status_name(rec.status) << '\n';
      break;
    case Format::Json: {
      ordered_json j{{"Z", rec.z}, {"symbol", rec.symbol}, {"name", rec.name}};
      if (rec.discovery_year)
        j["discovery_year"] = *rec.discovery_year;
      else
        j["discovery_year"] = nullptr;
      j["status"] = particles::status_name(rec.status);
      ctx.emit_json(j);
      break;
    }
  }
}

void cmd_family(const Context& ctx, int z) {
  const atomic::FamilyReport report = atomic::family_report(z);
  std::string series;
  for (std::size_t i = 0; i < report.series.size(); ++i) {
    if (i) series += ';';
    series += report.series[i];
  }
  switch (ctx.format()) {
    case Format::Text:
      *ctx.out << "Z=" << report.z << " shell=" << report.shell.label()
               << " subblock=" << atomic::subblock_name(report.tag) << '\n'
               << "family: " << report.family << '\n';
      if (!series.empty()) {
        *ctx.out << "series: " << series;
        if (report.no_homologue) *ctx.out << " (no homologue among known elements)";
        *ctx.out << '\n';
      }
      if (!report.note.empty()) *ctx.out << "note: " << report.note << '\n';
      break;
    case Format::Csv:
      *ctx.out << "Z,shell,subblock,family,series,no_homologue,note\n"
               << report.z << ',' << report.shell.label() << ','
               << atomic::subblock_name(report.tag) << ',' << report.family << ','
               << series << ',' << (report.no_homologue ? "true" : "false") << ','
               << report.note << '\n';
      break;
    case Format::Json: {
      ordered_json j{{"Z", report.z},
                     {"shell", report.shell.label()},
                     {"subblock", atomic::subblock_name(report.tag)},
                     {"family", report.family},
                     {"series", report.series},
                     {"no_homologue", report.no_homologue}};
      if (!report.note.empty()) j["note"] = report.note;
      ctx.emit_json(j);
      break;
    }
  }
}

void cmd_raregases(const Context& ctx) {
  const std::vector<int> gases = atomic::rare_gas_sequence();
  switch (ctx.format()) {
    case Format::Text: {
      for (std::size_t i = 0; i < gases.size(); ++i)
        *ctx.out << (i ? " " : "") << gases[i];
      *ctx.out << '\n';
      break;
    }
    case Format::Csv: {
      *ctx.out << "Z,delta\n";
      for (std::size_t i = 0; i < gases.size(); ++i) {
        *ctx.out << gases[i] << ',';
        if (i) *ctx.out << gases[i] - gases[i - 1];
        *ctx.out << '\n';
      }
      break;
    }
    case Format::Json: {
      ordered_json j{{"rare_gases", gases}};
      auto& deltas = j["deltas"] = ordered_json::array();
      for (std::size_t i = 1; i < gases.size(); ++i)
        deltas.push_back(gases[i] - gases[i - 1]);
      ctx.emit_json(j);
      break;
    }
  }
}

// ---- rep -------------------------------------------------------------------

void cmd_su3_dim(const Context& ctx, int p, int q) {
  const long long dim = rep::su3_dim(p, q);
  switch (ctx.format()) {
    case Format::Text: *ctx.out << dim << '\n'; break;
    case Format::Csv: *ctx.out << "p,q,dim\n" << p << ',' << q << ',' << dim << '\n'; break;
    case Format::Json: ctx.emit_json({{"p", p}, {"q", q}, {"dim", dim}}); break;
  }
}

void cmd_su3_content(const Context& ctx, int p, int q) {
  const rep::Su3Irrep irrep(p, q);
  // multiplicity per isospin, ascending
  std::map<int, int> counts;
  for (const auto& m : rep::su3_su2_content(irrep)) ++counts[m.j().twice()];
  switch (ctx.format()) {
    case Format::Text: {
      *ctx.out << irrep.dim() << " = ";
      bool first = true;
      for (const auto& [two_j, count] : counts) {
        if (!first) *ctx.out << " + ";
        first = false;
        if (count > 1) *ctx.out << count;
        *ctx.out << '(' << HalfInt::from_twice(two_j).str() << ')';
      }
      *ctx.out << '\n';
      break;
    }
    case Format::Csv:
      *ctx.out << "two_j,count\n";
      for (const auto& [two_j, count] : counts)
        *ctx.out << two_j << ',' << count << '\n';
      break;
    case Format::Json: {
      ordered_json j{{"p", p}, {"q", q}, {"dim", irrep.dim()}};
      auto& content = j["content"] = ordered_json::array();
      for (const auto& [two_j, count] : counts)
        content.push_back({{"two_j", two_j}, {"count", count}});
      ctx.emit_json(j);
      break;
    }
  }
}

void cmd_so4_branch(const Context& ctx, int two_j) {
  const HalfInt j = HalfInt::from_twice(two_j);
  const auto irreps = rep::so4_branch(rep::So4Irrep(j, j));
  switch (ctx.format()) {
    case Format::Text: {
      *ctx.out << '(' << j.str() << ',' << j.str() << ") = ";
      for (std::size_t i = 0; i < irreps.size(); ++i)
        *ctx.out << (i ? " + " : "") << '(' << irreps[i].l() << ')';
      *ctx.out << '\n';
      break;
    }
    case Format::Csv:
      *ctx.out << "l,dim\n";
      for (const auto& r : irreps) *ctx.out << r.l() << ',' << r.dim() << '\n';
      break;
    case Format::Json: {
      ordered_json j_out{{"two_j", two_j}};
      auto& arr = j_out["irreps"] = ordered_json::array();
      long long total = 0;
      for (const auto& r : irreps) {
        arr.push_back({{"l", r.l()}, {"dim", r.dim()}});
        total += r.dim();
      }
      j_out["total_dim"] = total;
      ctx.emit_json(j_out);
      break;
    }
  }
}

void cmd_so42_h(const Context& ctx, int nmax) {
  const auto irreps = rep::so42_h_truncated(nmax);
  long long total = 0;
  for (const auto& r : irreps) total += r.dim();
  switch (ctx.format()) {
    case Format::Text: {
      for (const auto& r : irreps)
        *ctx.out << '(' << r.j1().str() << ',' << r.j2().str() << ") dim " << r.dim()
                 << '\n';
      *ctx.out << "total " << total << '\n';
      break;
    }
    case Format::Csv:
      *ctx.out << "two_j,dim\n";
      for (const auto& r : irreps)
        *ctx.out << r.j1().twice() << ',' << r.dim() << '\n';
      break;
    case Format::Json: {
      ordered_json j{{"nmax", nmax}};
      auto& arr = j["irreps"] = ordered_json::array();
      for (const auto& r : irreps)
        arr.push_back({{"two_j", r.j1().twice()}, {"dim", r.dim()}});
      j["total_dim"] = total;
      ctx.emit_json(j);
      break;
    }
  }
}

void cmd_racah(const Context& ctx, int order, int rank, int casimirs) {
  const rep::GroupProfile profile{"custom", order, rank, casimirs};
  const int missing = rep::racah_missing_labels(profile);
  const int complete = rep::complete_set_size(profile);
  switch (ctx.format()) {
    case Format::Text:
      *ctx.out << "missing labels: " << missing << '\n'
               << "complete set: " << complete << '\n';
      break;
    case Format::Csv:
      *ctx.out << "order,rank,casimirs,missing_labels,complete_set\n"
               << order << ',' << rank << ',' << casimirs << ',' << missing << ','
               << complete << '\n';
      break;
    case Format::Json:
      ctx.emit_json({{"order", order},
                     {"rank", rank},
                     {"casimirs", casimirs},
                     {"missing_labels", missing},
                     {"complete_set", complete}});
      break;
  }
}

// ---- hadron ----------------------------------------------------------------

std::string join_flavors(const hadron::HadronComposition& c) {
  std::string s;
  for (const auto& f : c.constituents()) {
    if (!s.empty()) s += ' ';
    s += f.name;
  }
  return s;
}

void cmd_compose(const Context& ctx, const std::string& flavors) {
  const auto composition = hadron::HadronComposition::parse(flavors, ctx.flavors());
  const hadron::QuantumNumbers q = hadron::compose(composition);
  switch (ctx.format()) {
    case Format::Text:
      *ctx.out << "B=" << q.baryon_number.str() << " Q=" << q.charge.str()
               << " Y=" << q.hypercharge.str() << " I3=" << q.isospin3.str()
               << " S=" << q.strangeness << '\n';
      break;
    case Format::Csv:
      *ctx.out << "B,Q,Y,I3,S\n"
               << q.baryon_number.str() << ',' << q.charge.str() << ','
               << q.hypercharge.str() << ',' << q.isospin3.str() << ','
               << q.strangeness << '\n';
      break;
    case Format::Json:
      ctx.emit_json({{"constituents", join_flavors(composition)},
                     {"B", q.baryon_number.str()},
                     {"Q", q.charge.str()},
                     {"Y", q.hypercharge.str()},
                     {"I3", q.isospin3.str()},
                     {"S", q.strangeness}});
      break;
  }
}

void cmd_color(const Context& ctx, const std::string& flavors) {
  const auto composition = hadron::HadronComposition::parse(flavors, ctx.flavors());
  const auto terms = hadron::color_wavefunction(composition);
  switch (ctx.format()) {
    case Format::Text: {
      for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string t = hadron::color_term_str(terms[i]);
        if (i == 0 && terms[i].coefficient > 0) t = t.substr(2);  // drop leading "+ "
        *ctx.out << (i ? " " : "") << t;
      }
      *ctx.out << '\n';
      break;
    }
    case Format::Csv: {
      *ctx.out << "coefficient";
      for (std::size_t i = 0; i < terms.front().factors.size(); ++i)
        *ctx.out << ",factor" << i + 1;
      *ctx.out << '\n';
      for (const auto& term : terms) {
        *ctx.out << term.coefficient;
        for (const auto& f : term.factors) {
          *ctx.out << ',' << f.flavor << '_' << hadron::color_letter(f.color);
          if (f.anti) *ctx.out << "bar";
        }
        *ctx.out << '\n';
      }
      break;
    }
    case Format::Json: {
      ordered_json j{{"constituents", join_flavors(composition)}};
      auto& arr = j["terms"] = ordered_json::array();
      for (const auto& term : terms) {
        ordered_json t{{"coefficient", term.coefficient}};
        auto& factors = t["factors"] = ordered_json::array();
        for (const auto& f : term.factors)
          factors.push_back({{"flavor", f.flavor},
                             {"color", std::string(1, hadron::color_letter(f.color))},
                             {"anti", f.anti}});
        arr.push_back(std::move(t));
      }
      ctx.emit_json(j);
      break;
    }
  }
}

void cmd_classify(const Context& ctx, const std::string& path) {
  const auto members = hadron::load_multiplet_json(path);
  const hadron::Classification result = hadron::classify_multiplet(members);
  std::string sizes, matches;
  for (std::size_t i = 0; i < result.sizes.size(); ++i)
    sizes += (i ? ";" : "") + std::to_string(result.sizes[i]);
  for (std::size_t i = 0; i < result.matches.size(); ++i)
    matches += (i ? "; " : "") + result.matches[i];
  switch (ctx.format()) {
    case Format::Text:
      *ctx.out << "spin " << result.spin.str() << " parity "
               << (result.parity > 0 ? "+1" : "-1") << '\n'
               << "multiplet sizes: " << sizes << '\n'
               << "matches: " << matches << '\n';
      break;
    case Format::Csv:
      *ctx.out << "two_spin,parity,sizes,matches\n"
               << result.spin.twice() << ',' << result.parity << ',' << sizes << ",\""
               << matches << "\"\n";
      break;
    case Format::Json:
      ctx.emit_json({{"two_spin", result.spin.twice()},
                     {"parity", result.parity},
                     {"sizes", result.sizes},
                     {"matches", result.matches}});
      break;
  }
}

void cmd_predict(const Context& ctx, const std::string& path) {
  const auto members = hadron::load_multiplet_json(path);

  // The irrep is inferred: one member short of the candidate's dimension and
  // a unique empty slot.
  const std::vector<std::pair<std::string, rep::Su3Irrep>> candidates = {
      {"1 (singlet)", {0, 0}},
      {"8 (octet)", {1, 1}},
      {"10 (decuplet)", {3, 0}},
      {"10* (anti-decuplet)", {0, 3}},
  };
  std::vector<std::pair<std::string, hadron::EkaPrediction>> fits;
  for (const auto& [name, irrep] : candidates) {
    if (irrep.dim() != static_cast<long long>(members.size()) + 1) continue;
    try {
      fits.emplace_back(name, hadron::eka_predict(irrep, members));
    } catch (const std::invalid_argument&) {
      // candidate does not accommodate the members
    }
  }
  if (fits.empty())
    throw std::domain_error("no candidate irrep leaves exactly one empty slot");
  if (fits.size() > 1)
    throw std::domain_error("ambiguous multiplet: several irreps fit");

  const auto& [irrep_name, p] = fits.front();
  switch (ctx.format()) {
    case Format::Text:
      *ctx.out << "irrep: " << irrep_name << '\n'
               << "hole: I3=" << p.isospin3.str() << " Y=" << p.hypercharge.str()
               << " Q=" << p.charge.str() << " S=" << p.strangeness << '\n';
      if (p.mass) *ctx.out << "mass: " << mass_str(*p.mass) << '\n';
      break;
    case Format::Csv:
      *ctx.out << "irrep,two_I3,Y,Q,S,mass\n"
               << irrep_name.substr(0, irrep_name.find(' ')) << ','
               << p.isospin3.twice() << ',' << p.hypercharge.str() << ','
               << p.charge.str() << ',' << p.strangeness << ','
               << (p.mass ? mass_str(*p.mass) : std::string{}) << '\n';
      break;
    case Format::Json: {
      ordered_json j{{"irrep", irrep_name},
                     {"two_I3", p.isospin3.twice()},
                     {"Y", p.hypercharge.str()},
                     {"Q", p.charge.str()},
                     {"S", p.strangeness}};
      if (p.mass)
        j["mass"] = mass_rounded(*p.mass);
      else
        j["mass"] = nullptr;
      ctx.emit_json(j);
      break;
    }
  }
}

void cmd_gluons(const Context& ctx, int n_colors) {
  const long long n = hadron::gluon_count(n_colors);
  switch (ctx.format()) {
    case Format::Text: *ctx.out << n << '\n'; break;
    case Format::Csv:
      *ctx.out << "n_colors,gluons\n" << n_colors << ',' << n << '\n';
      break;
    case Format::Json:
      ctx.emit_json({{"n_colors", n_colors}, {"gluons", n}});
      break;
  }
}

// ---- sm / history ----------------------------------------------------------

void cmd_census(const Context& ctx) {
  const particles::Census c = ctx.registry().standard_model_census();
  switch (ctx.format()) {
    case Format::Text:
      *ctx.out << "fermions=" << c.fermions << " sm_mediators=" << c.sm_mediators
               << " mediators_with_graviton=" << c.mediators_with_graviton
               << " higgs=" << c.higgs << '\n';
      break;
    case Format::Csv:
      *ctx.out << "fermions,sm_mediators,mediators_with_graviton,higgs\n"
               << c.fermions << ',' << c.sm_mediators << ','
               << c.mediators_with_graviton << ',' << c.higgs << '\n';
      break;
    case Format::Json:
      ctx.emit_json({{"fermions", c.fermions},
                     {"sm_mediators", c.sm_mediators},
                     {"mediators_with_graviton", c.mediators_with_graviton},
                     {"higgs", c.higgs}});
      break;
  }
}

void cmd_partner(const Context& ctx, const std::string& name) {
  const particles::SuperpartnerEntry e = ctx.registry().superpartner(name);
  switch (ctx.format()) {
    case Format::Text:
      *ctx.out << e.particle << " <-> " << e.partner << " (spin "
               << e.particle_spin.str() << " -> spin " << e.partner_spin.str()
               << ")\n";
      break;
    case Format::Csv:
      *ctx.out << "particle,partner,two_spin_particle,two_spin_partner\n"
               << e.particle << ',' << e.partner << ',' << e.particle_spin.twice()
               << ',' << e.partner_spin.twice() << '\n';
      break;
    case Format::Json:
      ctx.emit_json({{"particle", e.particle},
                     {"partner", e.partner},
                     {"two_spin_particle", e.particle_spin.twice()},
                     {"two_spin_partner", e.partner_spin.twice()}});
      break;
  }
}

void cmd_history(const Context& ctx, int year) {
  const int count = ctx.registry().elements_known(year);
  switch (ctx.format()) {
    case Format::Text: *ctx.out << count << '\n'; break;
    case Format::Csv: *ctx.out << "year,count\n" << year << ',' << count << '\n'; break;
    case Format::Json: ctx.emit_json({{"year", year}, {"count", count}}); break;
  }
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group-theoretic classification tables: the SO(4,2)xSU(2) "
               "periodic table of elements and the SU(3) tables of hadrons",
               "symmetry-atlas"};
  app.require_subcommand(1);

  Context ctx;
  ctx.out = &out;
  std::string format = "text";
  ctx.format_name = &format;
  app.add_option("--format,-f", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--data", ctx.data_override,
                 "dataset directory (default: SYMMETRY_ATLAS_DATA or built-in)");

  // table
  auto* table = app.add_subcommand("table", "render a periodic table layout");
  table->fallthrough();
  auto table_layout = std::make_shared<std::string>();
  auto table_zmax = std::make_shared<int>(0);
  table->add_option("--layout", *table_layout, "table layout")
      ->required()
      ->check(CLI::IsMember({"madelung", "so42", "scerri", "conventional18"}));
  table->add_option("--zmax", *table_zmax, "highest atomic number")->required();
  table->callback([&ctx, table_layout, table_zmax] {
    cmd_table(ctx, *table_layout, *table_zmax);
  });

  // config
  auto* config = app.add_subcommand("config", "ground electronic configuration");
  config->fallthrough();
  auto config_z = std::make_shared<int>(0);
  auto config_rule = std::make_shared<std::string>("madelung");
  config->add_option("Z", *config_z, "atomic number")->required();
  config->add_option("--rule", *config_rule, "filling rule")
      ->check(CLI::IsMember({"madelung", "enl", "en"}))
      ->capture_default_str();
  config->callback([&ctx, config_z, config_rule] {
    cmd_config(ctx, *config_z, *config_rule);
  });

  // address
  auto* address = app.add_subcommand("address", "Z <-> (n,l,j,mj) correspondence");
  address->fallthrough();
  auto address_z = std::make_shared<int>(0);
  auto address_nljm = std::make_shared<std::vector<int>>();
  auto* query = address->add_option_group("query");
  auto* opt_z = query->add_option("--z", *address_z, "atomic number");
  query->add_option("--nljm", *address_nljm, "n l 2j 2mj")->expected(4);
  query->require_option(1);
  address->callback([&ctx, address_z, address_nljm, opt_z] {
    if (opt_z->count()) {
      emit_address(ctx, *address_z, atomic::z_to_address(*address_z), true);
    } else {
      const auto& v = *address_nljm;
      const atomic::Address a{v[0], v[1], HalfInt::from_twice(v[2]),
                              HalfInt::from_twice(v[3])};
      emit_address(ctx, atomic::address_to_z(a), a, false);
    }
  });

  // element / family / raregases
  auto* element = app.add_subcommand("element", "element record from the dataset");
  element->fallthrough();
  auto element_z = std::make_shared<int>(0);
  element->add_option("Z", *element_z, "atomic number")->required();
  element->callback([&ctx, element_z] { cmd_element(ctx, *element_z); });

  auto* family = app.add_subcommand("family", "column family and series membership");
  family->fallthrough();
  auto family_z = std::make_shared<int>(0);
  family->add_option("Z", *family_z, "atomic number")->required();
  family->callback([&ctx, family_z] { cmd_family(ctx, *family_z); });

  auto* raregases = app.add_subcommand("raregases", "rare-gas atomic numbers");
  raregases->fallthrough();
  raregases->callback([&ctx] { cmd_raregases(ctx); });

  // rep
  auto* rep_cmd = app.add_subcommand("rep", "representation-theory primitives");
  rep_cmd->require_subcommand(1);
  rep_cmd->fallthrough();

  auto* su3_dim_cmd = rep_cmd->add_subcommand("su3-dim", "dimension of SU(3) (p,q)");
  su3_dim_cmd->fallthrough();
  auto su3_p = std::make_shared<int>(0);
  auto su3_q = std::make_shared<int>(0);
  su3_dim_cmd->add_option("p", *su3_p)->required();
  su3_dim_cmd->add_option("q", *su3_q)->required();
  su3_dim_cmd->callback([&ctx, su3_p, su3_q] { cmd_su3_dim(ctx, *su3_p, *su3_q); });

  auto* su3_content_cmd =
      rep_cmd->add_subcommand("su3-content", "SU(2) content of SU(3) (p,q)");
  su3_content_cmd->fallthrough();
  auto content_p = std::make_shared<int>(0);
  auto content_q = std::make_shared<int>(0);
  su3_content_cmd->add_option("p", *content_p)->required();
  su3_content_cmd->add_option("q", *content_q)->required();
  su3_content_cmd->callback(
      [&ctx, content_p, content_q] { cmd_su3_content(ctx, *content_p, *content_q); });

  auto* so4_branch_cmd =
      rep_cmd->add_subcommand("so4-branch", "SO(3) series of the SO(4) irrep (j,j)");
  so4_branch_cmd->fallthrough();
  auto branch_two_j = std::make_shared<int>(0);
  so4_branch_cmd->add_option("two_j", *branch_two_j, "2j")->required();
  so4_branch_cmd->callback([&ctx, branch_two_j] { cmd_so4_branch(ctx, *branch_two_j); });

  auto* so42_h_cmd =
      rep_cmd->add_subcommand("so42-h", "truncated SO(4,2) ladder representation");
  so42_h_cmd->fallthrough();
  auto h_nmax = std::make_shared<int>(0);
  so42_h_cmd->add_option("nmax", *h_nmax)->required();
  so42_h_cmd->callback([&ctx, h_nmax] { cmd_so42_h(ctx, *h_nmax); });

  auto* racah_cmd = rep_cmd->add_subcommand("racah", "complete commuting set size");
  racah_cmd->fallthrough();
  auto racah_order = std::make_shared<int>(0);
  auto racah_rank = std::make_shared<int>(0);
  auto racah_casimirs = std::make_shared<int>(0);
  racah_cmd->add_option("order", *racah_order)->required();
  racah_cmd->add_option("rank", *racah_rank)->required();
  racah_cmd->add_option("casimirs", *racah_casimirs)->required();
  racah_cmd->callback([&ctx, racah_order, racah_rank, racah_casimirs] {
    cmd_racah(ctx, *racah_order, *racah_rank, *racah_casimirs);
  });

  // hadron
  auto* hadron_cmd = app.add_subcommand("hadron", "quark-model engine");
  hadron_cmd->require_subcommand(1);
  hadron_cmd->fallthrough();

  const auto add_flavor_cmd = [&](const std::string& name, const std::string& desc,
                                  auto fn) {
    auto* cmd = hadron_cmd->add_subcommand(name, desc);
    cmd->fallthrough();
    auto tokens = std::make_shared<std::vector<std::string>>();
    cmd->add_option("flavors", *tokens, "quark flavors, e.g. u u d or u dbar")
        ->required()
        ->expected(-1);
    cmd->callback([&ctx, tokens, fn] {
      std::string joined;
      for (const auto& t : *tokens) {
        if (!joined.empty()) joined += ' ';
        joined += t;
      }
      fn(ctx, joined);
    });
  };
  add_flavor_cmd("compose", "additive quantum numbers of a bound state", cmd_compose);
  add_flavor_cmd("color", "color-singlet wavefunction", cmd_color);

  auto* classify_cmd =
      hadron_cmd->add_subcommand("classify", "SU(3) multiplet assignment");
  classify_cmd->fallthrough();
  auto classify_path = std::make_shared<std::string>();
  classify_cmd->add_option("multiplet", *classify_path, "multiplet JSON file")
      ->required();
  classify_cmd->callback([&ctx, classify_path] { cmd_classify(ctx, *classify_path); });

  auto* predict_cmd =
      hadron_cmd->add_subcommand("predict", "eka-prediction of the missing member");
  predict_cmd->fallthrough();
  auto predict_path = std::make_shared<std::string>();
  predict_cmd->add_option("multiplet", *predict_path, "multiplet JSON file")
      ->required();
  predict_cmd->callback([&ctx, predict_path] { cmd_predict(ctx, *predict_path); });

  auto* gluons_cmd = hadron_cmd->add_subcommand("gluons", "gauge bosons of SU(n) color");
  gluons_cmd->fallthrough();
  auto gluons_n = std::make_shared<int>(3);
  gluons_cmd->add_option("n", *gluons_n, "number of colors")->capture_default_str();
  gluons_cmd->callback([&ctx, gluons_n] { cmd_gluons(ctx, *gluons_n); });

  // sm / history
  auto* sm = app.add_subcommand("sm", "standard-model registry");
  sm->require_subcommand(1);
  sm->fallthrough();
  auto* census_cmd = sm->add_subcommand("census", "particle counts");
  census_cmd->fallthrough();
  census_cmd->callback([&ctx] { cmd_census(ctx); });
  auto* partner_cmd = sm->add_subcommand("partner", "supersymmetric partner");
  partner_cmd->fallthrough();
  auto partner_name = std::make_shared<std::string>();
  partner_cmd->add_option("name", *partner_name, "particle name")->required();
  partner_cmd->callback([&ctx, partner_name] { cmd_partner(ctx, *partner_name); });

  auto* history = app.add_subcommand("history", "known element count for a year");
  history->fallthrough();
  auto history_year = std::make_shared<int>(0);
  history->add_option("year", *history_year)->required();
  history->callback([&ctx, history_year] { cmd_history(ctx, *history_year); });

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes args back to front
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace atlas::cli
