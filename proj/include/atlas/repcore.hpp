#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "atlas/halfint.hpp"

namespace atlas::rep {

/// SU(2) irrep (j), dimension 2j+1.
class Su2Irrep {
public:
  explicit Su2Irrep(HalfInt j) : j_(j) {
    if (j < HalfInt(0)) throw std::invalid_argument("Su2Irrep: j must be >= 0");
  }
  HalfInt j() const { return j_; }
  long long dim() const { return j_.twice() + 1; }
  friend auto operator<=>(const Su2Irrep&, const Su2Irrep&) = default;

private:
  HalfInt j_;
};

/// SO(3) irrep (l), dimension 2l+1.
class So3Irrep {
public:
  explicit So3Irrep(int l) : l_(l) {
    if (l < 0) throw std::invalid_argument("So3Irrep: l must be >= 0");
  }
  int l() const { return l_; }
  long long dim() const { return 2LL * l_ + 1; }
  friend auto operator<=>(const So3Irrep&, const So3Irrep&) = default;

private:
  int l_;
};

/// SO(4) irrep (j1, j2), dimension (2j1+1)(2j2+1).
class So4Irrep {
public:
  So4Irrep(HalfInt j1, HalfInt j2) : j1_(j1), j2_(j2) {
    if (j1 < HalfInt(0) || j2 < HalfInt(0))
      throw std::invalid_argument("So4Irrep: labels must be >= 0");
  }
  HalfInt j1() const { return j1_; }
  HalfInt j2() const { return j2_; }
  bool diagonal() const { return j1_ == j2_; }
  long long dim() const {
    return (j1_.twice() + 1LL) * (j2_.twice() + 1LL);
  }
  friend auto operator<=>(const So4Irrep&, const So4Irrep&) = default;

private:
  HalfInt j1_, j2_;
};

/// SU(3) irrep (p, q), dimension (p+1)(q+1)(p+q+2)/2.
class Su3Irrep {
public:
  Su3Irrep(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0)
      throw std::invalid_argument("Su3Irrep: labels must be >= 0");
  }
  int p() const { return p_; }
  int q() const { return q_; }
  long long dim() const;
  friend auto operator<=>(const Su3Irrep&, const Su3Irrep&) = default;

private:
  int p_, q_;
};

long long su3_dim(long long p, long long q);

/// SO(4) -> SO(3) decomposition of a diagonal irrep: (j,j) = (0)+(1)+...+(2j).
/// Rejects non-diagonal input.
std::vector<So3Irrep> so4_branch(const So4Irrep& rep);

/// Weight multiplicities of the SU(3) irrep (p,q), keyed by the weight's
/// Dynkin labels (a, b).  Built by peeling concentric shells off the weight
/// diagram: the outer hexagon has multiplicity 1, each inner shell one more,
/// constant once the shell shape degenerates to a triangle.
/// Isospin/hypercharge of a weight: 2*I3 = a, 3*Y = a + 2b.
std::map<std::pair<int, int>, int> su3_weight_multiplicities(const Su3Irrep& rep);

/// One SU(2) isospin multiplet sitting at a fixed hypercharge layer.
struct IsospinMultiplet {
  Su2Irrep isospin;
  int three_y;  // 3*Y, always an integer on the weight lattice
  friend auto operator<=>(const IsospinMultiplet&, const IsospinMultiplet&) = default;
};

/// Full SU(2)xU(1) decomposition of (p,q), hypercharge layer by layer.
/// Ordered by descending hypercharge, then descending isospin.
std::vector<IsospinMultiplet> su3_isospin_layers(const Su3Irrep& rep);

/// Isospin content of (p,q) as a multiset of SU(2) irreps (sorted ascending).
/// Multiplet dimensions sum to su3_dim(p,q).
std::vector<Su2Irrep> su3_su2_content(const Su3Irrep& rep);

/// Finite prefix of the SO(4,2) ladder representation: [(j,j) for 2j+1 = 1..nmax].
/// Total dimension is nmax(nmax+1)(2nmax+1)/6.
std::vector<So4Irrep> so42_h_truncated(int nmax);

/// Structural data of a Lie group: number of generators (order), rank, and
/// the number of independent Casimir operators.
struct GroupProfile {
  std::string name;
  int order = 0;
  int rank = 0;
  int n_casimirs = 0;
};

/// Racah's count of extra commuting operators needed to complete a labeling
/// set: (order - 3*rank)/2.  Undefined when the numerator is odd or negative.
int racah_missing_labels(const GroupProfile& g);

/// Size of a complete commuting set: rank + Casimirs + Racah missing labels.
int complete_set_size(const GroupProfile& g);

GroupProfile so42_profile();
GroupProfile su2_profile();
GroupProfile su3_profile();

}  // namespace atlas::rep
