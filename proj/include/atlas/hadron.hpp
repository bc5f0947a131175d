#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/halfint.hpp"
#include "atlas/rational.hpp"
#include "atlas/repcore.hpp"

namespace atlas::hadron {

/// One quark (or antiquark) flavor with its additive quantum numbers.
struct QuarkFlavor {
  std::string name;        // "u", "dbar", ...
  Rational baryon_number;  // B
  Rational charge;         // Q
  Rational hypercharge;    // Y
  HalfInt isospin;         // I
  HalfInt isospin3;        // I3
  int strangeness = 0;     // S
  bool antiparticle = false;

  /// Antiparticle: negates every additive quantum number, preserves I.
  QuarkFlavor conjugate() const;
};

/// Flavor registry backed by the bundled quark table.  Checks the
/// Gell-Mann-Nishijima relation Q = I3 + Y/2 on every row at load time.
class FlavorTable {
public:
  static FlavorTable load(const std::filesystem::path& csv_path);

  const QuarkFlavor& flavor(std::string_view name) const;
  const std::vector<QuarkFlavor>& all() const { return flavors_; }

private:
  std::vector<QuarkFlavor> flavors_;
};

enum class HadronKind { Baryon, AntiBaryon, Meson };

/// A bound state: qqq, anti-q anti-q anti-q, or q anti-q.
class HadronComposition {
public:
  static HadronComposition of(std::vector<QuarkFlavor> constituents);
  /// Parses whitespace-separated flavor names, e.g. "u u d" or "u dbar".
  static HadronComposition parse(std::string_view text, const FlavorTable& table);

  HadronKind kind() const { return kind_; }
  const std::vector<QuarkFlavor>& constituents() const { return constituents_; }

private:
  HadronComposition(HadronKind kind, std::vector<QuarkFlavor> constituents)
      : kind_(kind), constituents_(std::move(constituents)) {}
  HadronKind kind_;
  std::vector<QuarkFlavor> constituents_;
};

struct QuantumNumbers {
  Rational baryon_number;
  Rational charge;
  Rational hypercharge;
  HalfInt isospin3;
  int strangeness = 0;
};

/// Exact additive quantum numbers of a hadron (sums over constituents).
QuantumNumbers compose(const HadronComposition& c);

/// Gell-Mann-Nishijima relation: Q - I3 - Y/2 = 0, checked exactly.
bool gmn_check(const QuantumNumbers& q);

enum class Color { R, G, B };

char color_letter(Color c);

struct ColorFactor {
  std::string flavor;
  Color color = Color::R;
  bool anti = false;  // anticolor slot (antiquark constituent)
  friend auto operator<=>(const ColorFactor&, const ColorFactor&) = default;
};

struct ColorTerm {
  int coefficient = 1;  // +1 or -1
  std::vector<ColorFactor> factors;
  friend auto operator<=>(const ColorTerm&, const ColorTerm&) = default;
};

/// Color-singlet wavefunction: the signed sum over the 6 color permutations
/// for (anti)baryons, the diagonal color/anticolor sum for mesons.
std::vector<ColorTerm> color_wavefunction(const HadronComposition& c);

std::string color_term_str(const ColorTerm& term);

/// Number of gauge bosons of an SU(n) color group: n^2 - 1.
long long gluon_count(int n_colors);

struct MultipletMember {
  std::string label;
  Rational charge;       // Q
  int strangeness = 0;   // S
  HalfInt spin;
  int parity = 1;        // +1 or -1
  std::optional<double> mass;  // MeV/c^2
};

std::vector<MultipletMember> load_multiplet_json(const std::filesystem::path& path);
std::vector<MultipletMember> parse_multiplet_json(const std::string& text);

struct Classification {
  HalfInt spin;
  int parity = 1;
  std::vector<int> sizes;            // isospin multiplet sizes, descending
  std::vector<std::string> matches;  // e.g. {"10 (decuplet)", "10* (anti-decuplet)"}
};

/// Groups members into isospin multiplets per strangeness layer and matches
/// the size multiset against the SU(3) candidates 1, 8, 10, 10*, 8+1.
Classification classify_multiplet(const std::vector<MultipletMember>& members);

struct EkaPrediction {
  HalfInt isospin3;
  Rational hypercharge;
  Rational charge;
  int strangeness = 0;
  std::optional<double> mass;  // linear-in-Y least-squares extrapolation
};

/// Quantum numbers (and, when the mass data allows, the mass) of the single
/// unoccupied slot of `irrep`.
EkaPrediction eka_predict(const rep::Su3Irrep& irrep,
                          const std::vector<MultipletMember>& members);

struct NucleonDoublet {
  rep::Su2Irrep isospin;
  struct Member {
    std::string name;
    HalfInt isospin3;
  };
  std::array<Member, 2> members;
};

/// The 1932 proton/neutron isospin doublet.
NucleonDoublet heisenberg_doublet();

}  // namespace atlas::hadron
