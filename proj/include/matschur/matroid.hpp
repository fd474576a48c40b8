#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matschur/scalars.hpp"
#include "matschur/subset.hpp"

namespace matschur {

struct MatroidError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bivariate polynomial with integer coefficients, keyed by (x-deg, y-deg).
// Doubles as a plain member of Z[x,y] for the convolution identity.
struct TuttePoly {
  std::map<std::pair<int, int>, Int> coeff;

  Int operator()(const Int& x, const Int& y) const;
  Int coefficient(int i, int j) const;
  TuttePoly& operator+=(const TuttePoly& o);
  friend TuttePoly operator*(const TuttePoly& a, const TuttePoly& b);
  bool operator==(const TuttePoly& o) const { return coeff == o.coeff; }
  // substitute x=0 (resp. y=0), keeping a polynomial in the other variable
  TuttePoly at_x0() const;
  TuttePoly at_y0() const;
  std::string to_string() const;
};

struct ActivityRecord {
  Subset basis = 0;
  Subset internally_active = 0;
  Subset externally_active = 0;
};

struct CyclicFlats {
  std::vector<Subset> flats;  // sorted by (size, mask); front = loops, back = complement of coloops
  int index_of(Subset f) const;     // -1 when absent
  bool member(Subset f) const { return index_of(f) >= 0; }
  Subset loops_flat() const { return flats.front(); }
  Subset coloop_complement_flat() const { return flats.back(); }
};

struct MatroidMinor;

class Matroid {
 public:
  // Validates equal cardinality and the exchange axiom.
  static Matroid from_bases(int n, std::vector<Subset> bases);
  // Edges labeled 0..edges.size()-1 in input order; loops/parallels allowed.
  static Matroid from_graph(int vertices, const std::vector<std::pair<int, int>>& edges);
  static Matroid uniform(int r, int n);

  int size() const { return n_; }
  int rank() const { return rank_; }
  Subset ground() const { return full_set(n_); }
  const std::vector<Subset>& bases() const { return bases_; }
  bool is_basis(Subset b) const;

  int rank(Subset s) const;
  bool independent(Subset s) const { return rank(s) == popcount(s); }
  Subset closure(Subset s) const;
  int rank_in_minor(Subset contracted, Subset s) const {
    return rank(contracted | s) - rank(contracted);
  }

  Subset loops() const;
  Subset coloops() const;

  Matroid dual() const;

  // M(F)/E for E subset of F; relabels to a dense ground set.
  MatroidMinor minor(Subset contract, Subset restrict_to) const;

  std::vector<Subset> flats() const;
  CyclicFlats cyclic_flats() const;

  TuttePoly tutte() const;
  long long beta() const;
  long long mu_plus() const;       // T(1,0), externally passive bases
  long long mu_plus_dual() const;  // T(0,1), internally passive bases

  Subset fundamental_circuit(Subset basis, int p) const;
  Subset fundamental_bond(Subset basis, int b) const;
  ActivityRecord activities(Subset basis) const;

  bool connected() const;

 private:
  Matroid(int n, int rank, std::vector<Subset> bases);

  int n_ = 0;
  int rank_ = 0;
  std::vector<Subset> bases_;  // sorted

  struct RankCache;
  std::shared_ptr<RankCache> cache_;
};

struct MatroidMinor {
  Matroid matroid;             // dense ground set 0..k-1
  std::vector<int> embedding;  // new label -> ambient element, increasing
};

// Graphic matroid of the complete graph on four vertices.
Matroid k4();

// Named instances the test and acceptance suites run over: U(1,n) and its dual
// for n=2..6, U(2,n) and its dual for n=3..6, K4 and its dual.
std::vector<std::pair<std::string, Matroid>> library_matroids();

}  // namespace matschur
