#include "atlas/repcore.hpp"

#include <algorithm>
#include <stdexcept>

namespace atlas::rep {

long long su3_dim(long long p, long long q) {
  if (p < 0 || q < 0)
    throw std::invalid_argument("su3_dim: labels must be >= 0");
  return (p + 1) * (q + 1) * (p + q + 2) / 2;
}

long long Su3Irrep::dim() const { return su3_dim(p_, q_); }

std::vector<So3Irrep> so4_branch(const So4Irrep& rep) {
  if (!rep.diagonal())
    throw std::invalid_argument("so4_branch: diagonal irrep required");
  std::vector<So3Irrep> out;
  const int two_j = rep.j1().twice();
  for (int l = 0; l <= two_j; ++l) out.emplace_back(l);
  return out;
}

namespace {

// Boundary lattice points of the shell with shape labels (P, Q), walked edge
// by edge starting from the dominant vertex.  3(P+Q) points for a hexagon or
// triangle, a single point for (0,0).  Coordinates are Dynkin labels (a, b);
// the simple roots are a1 = (2,-1) and a2 = (-1,2).
std::vector<std::pair<int, int>> shell_boundary(int P, int Q) {
  if (P == 0 && Q == 0) return {{0, 0}};
  std::vector<std::pair<int, int>> pts;
  int a = P, b = Q;
  const auto walk = [&](int steps, int da, int db) {
    for (int i = 0; i < steps; ++i) {
      pts.emplace_back(a, b);
      a += da;
      b += db;
    }
  };
  walk(P, -2, 1);   // -a1
  walk(Q, -1, -1);  // -(a1+a2)
  walk(P, 1, -2);   // -a2
  walk(Q, 2, -1);   // +a1
  walk(P, 1, 1);    // +(a1+a2)
  walk(Q, -1, 2);   // +a2
  return pts;
}

}  // namespace

std::map<std::pair<int, int>, int> su3_weight_multiplicities(const Su3Irrep& rep) {
  std::map<std::pair<int, int>, int> mult;
  const int cap = std::min(rep.p(), rep.q());
  int P = rep.p(), Q = rep.q();
  for (int shell = 0; P >= 0 && Q >= 0; ++shell) {
    const int m = std::min(shell, cap) + 1;
    for (const auto& w : shell_boundary(P, Q)) mult[w] = m;
    if (P == 0 && Q == 0) break;
    if (P > 0 && Q > 0) {
      --P;
      --Q;
    } else if (P > 0) {
      P -= 3;  // triangle shrinks three lattice units per shell
    } else {
      Q -= 3;
    }
  }
  return mult;
}

std::vector<IsospinMultiplet> su3_isospin_layers(const Su3Irrep& rep) {
  // Regroup weights by hypercharge layer; within a layer the multiplicity as
  // a function of I3 is symmetric and unimodal, so the number of multiplets
  // with isospin I is mult(I3 = I) - mult(I3 = I+1).
  std::map<int, std::map<int, int>> layers;  // 3Y -> (2*I3 -> multiplicity)
  for (const auto& [w, m] : su3_weight_multiplicities(rep)) {
    const auto [a, b] = w;
    layers[a + 2 * b][a] = m;
  }

  std::vector<IsospinMultiplet> out;
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    const auto& profile = it->second;
    const auto mult_at = [&](int two_i3) {
      const auto f = profile.find(two_i3);
      return f == profile.end() ? 0 : f->second;
    };
    const int two_i_max = profile.rbegin()->first;
    for (int two_i = two_i_max; two_i >= 0; two_i -= 2) {
      const int count = mult_at(two_i) - mult_at(two_i + 2);
      for (int c = 0; c < count; ++c)
        out.push_back({Su2Irrep(HalfInt::from_twice(two_i)), it->first});
    }
  }
  return out;
}

std::vector<Su2Irrep> su3_su2_content(const Su3Irrep& rep) {
  std::vector<Su2Irrep> out;
  for (const auto& m : su3_isospin_layers(rep)) out.push_back(m.isospin);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<So4Irrep> so42_h_truncated(int nmax) {
  if (nmax < 1) throw std::invalid_argument("so42_h_truncated: nmax must be >= 1");
  std::vector<So4Irrep> out;
  for (int n = 1; n <= nmax; ++n) {
    const HalfInt j = HalfInt::from_twice(n - 1);
    out.emplace_back(j, j);
  }
  return out;
}

int racah_missing_labels(const GroupProfile& g) {
  const int numerator = g.order - 3 * g.rank;
  if (numerator < 0 || numerator % 2 != 0)
    throw std::domain_error("Racah count undefined for this profile: " + g.name);
  return numerator / 2;
}

int complete_set_size(const GroupProfile& g) {
  return g.rank + g.n_casimirs + racah_missing_labels(g);
}

GroupProfile so42_profile() { return {"SO(4,2)", 15, 3, 3}; }
GroupProfile su2_profile() { return {"SU(2)", 3, 1, 1}; }
GroupProfile su3_profile() { return {"SU(3)", 8, 2, 2}; }

}  // namespace atlas::rep
