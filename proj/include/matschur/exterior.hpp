#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "matschur/matroid.hpp"
#include "matschur/scalars.hpp"
#include "matschur/subset.hpp"

namespace matschur {

struct WeightError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InhomogeneousInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weight function a : I -> Z \ {0}, interpreted in Q or reduced mod p.
class Weights {
 public:
  Weights() = default;
  explicit Weights(std::vector<std::int64_t> a);
  static Weights ones(int n) { return Weights(std::vector<std::int64_t>(n, 1)); }

  int size() const { return static_cast<int>(a_.size()); }
  std::int64_t operator()(int i) const { return a_[i]; }
  const std::vector<std::int64_t>& values() const { return a_; }

  Int product(Subset s) const;          // a(S)
  Rat inv_product(Subset s) const;      // a(S)^{-1}
  Int sum(Subset s) const;              // sum over S
  void require_units_mod(std::int64_t p) const;  // throws WeightNotUnit

 private:
  std::vector<std::int64_t> a_;
};

// Sparse element of the exterior algebra over Q: subset-mask -> coefficient,
// zero coefficients never stored.
class ExtVector {
 public:
  ExtVector() = default;
  static ExtVector monomial(Subset s, Rat c = Rat(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<Subset, Rat>& terms() const { return terms_; }
  Rat coefficient(Subset s) const;
  void add_term(Subset s, const Rat& c);

  ExtVector& operator+=(const ExtVector& o);
  ExtVector& operator-=(const ExtVector& o);
  ExtVector& operator*=(const Rat& c);
  friend ExtVector operator+(ExtVector a, const ExtVector& b) { return a += b; }
  friend ExtVector operator-(ExtVector a, const ExtVector& b) { return a -= b; }
  friend ExtVector operator*(const Rat& c, ExtVector v) { return v *= c; }
  bool operator==(const ExtVector& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  std::map<Subset, Rat> terms_;
};

ExtVector wedge(const ExtVector& x, const ExtVector& y);
Rat pair(const ExtVector& x, const ExtVector& y, const Weights& a);

// left adjoint of the wedge: <x -| y, z> = <y, x ^ z>
ExtVector contract_left(const ExtVector& x, const ExtVector& y, const Weights& a);
// right adjoint: <x |- y, z> = <x, z ^ y>
ExtVector contract_right(const ExtVector& x, const ExtVector& y, const Weights& a);

ExtVector boundary(const ExtVector& x);
// delta(e) = sum over s in ground of a(s) s ^ e
ExtVector delta(const ExtVector& x, const Weights& a, Subset ground);

// rank-splitting relative to a matroid: boundary = h + v, delta = h + v,
// where the h parts change the support rank and the v parts keep it
ExtVector boundary_h(const Matroid& m, const ExtVector& x);
ExtVector boundary_v(const Matroid& m, const ExtVector& x);
ExtVector delta_h(const Matroid& m, const ExtVector& x, const Weights& a);
ExtVector delta_v(const Matroid& m, const ExtVector& x, const Weights& a);

// D(v) = v -| e_ground
ExtVector duality_map(const ExtVector& x, const Weights& a, Subset ground);

struct GradedPiece {
  int degree = 0;
  int rank = 0;
  std::vector<Subset> monomials;  // ascending mask order
};

// all size-p subsets of the ground set with rank q
GradedPiece monomial_basis(const Matroid& m, int p, int q);

// ---- matrix forms on enumerated monomial lists ----

// entry (row T, col S) = sign of dropping the unique element of S \ T
MatZ boundary_matrix(const std::vector<Subset>& cols, const std::vector<Subset>& rows);
// entry (row T, col S) = a(s) * insert sign, T = S + {s}, s inside `ground`
MatZ delta_matrix(const std::vector<Subset>& cols, const std::vector<Subset>& rows,
                  const Weights& a, Subset ground);
// Gram of the pairing on the span of integer column vectors over `monomials`
MatQ gram_matrix(const MatZ& columns, const std::vector<Subset>& monomials, const Weights& a);
MatI gram_matrix_mod_p(const MatI& columns, const std::vector<Subset>& monomials,
                       const Weights& a, std::int64_t p);

}  // namespace matschur
