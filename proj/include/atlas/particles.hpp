#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atlas/halfint.hpp"
#include "atlas/rational.hpp"

namespace atlas::particles {

enum class ElementStatus { Named, NotNamed, NotObserved };

std::string status_name(ElementStatus s);

struct ElementRecord {
  int z = 0;
  std::string symbol;  // "/" for unnamed elements
  std::string name;
  std::optional<int> discovery_year;
  ElementStatus status = ElementStatus::Named;
};

enum class ParticleClass { Fermion, GaugeBoson, Higgs };

struct ParticleRecord {
  std::string name;
  ParticleClass cls = ParticleClass::Fermion;
  std::optional<int> generation;
  HalfInt spin;
  Rational charge;
  bool massless = false;
  bool color_charged = false;
  std::optional<int> discovery_year;
  std::optional<int> predicted_year;
};

struct InteractionRecord {
  std::string name;
  double relative_strength = 0.0;
  double range_cm = 0.0;  // infinity for unlimited range
  std::vector<std::string> quanta;
  std::string concern;
  std::string manifestation;
};

struct SuperpartnerEntry {
  std::string particle;
  std::string partner;
  HalfInt particle_spin;
  HalfInt partner_spin;
};

struct Census {
  int fermions = 0;
  int sm_mediators = 0;
  int mediators_with_graviton = 0;
  int higgs = 0;
};

/// Read-only registry over the bundled CSV snapshot (frozen at 2003).
/// Loaded once, immutable thereafter; all lookups are const.
class Registry {
public:
  static Registry load(const std::filesystem::path& data_dir);

  const ElementRecord& element(int z) const;
  int elements_known(int year) const;  // tabulated years only
  Census standard_model_census() const;
  const SuperpartnerEntry& superpartner(const std::string& name) const;
  const ParticleRecord& particle(const std::string& name) const;

  const std::vector<ElementRecord>& elements() const { return elements_; }
  const std::vector<ParticleRecord>& particles() const { return particles_; }
  const std::vector<InteractionRecord>& interactions() const { return interactions_; }
  const std::vector<SuperpartnerEntry>& superpartners() const { return superpartners_; }
  const std::map<int, int>& element_counts() const { return element_counts_; }

private:
  void validate() const;

  std::vector<ElementRecord> elements_;
  std::vector<ParticleRecord> particles_;
  std::vector<InteractionRecord> interactions_;
  std::vector<SuperpartnerEntry> superpartners_;
  std::map<int, int> element_counts_;  // year -> known elements
};

}  // namespace atlas::particles
