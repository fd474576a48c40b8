#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matschur/exterior.hpp"
#include "matschur/linalg.hpp"
#include "matschur/matroid.hpp"

namespace matschur {

struct FlatNotInPoset : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldSpec {
  bool prime_field = false;
  std::int64_t p = 0;
  static FieldSpec rationals() { return {false, 0}; }
  static FieldSpec mod(std::int64_t p) { return {true, p}; }
  bool operator==(const FieldSpec&) const = default;
};

// Additive character on the cyclic-flat poset; zero coefficients dropped.
struct Character {
  std::map<Subset, long long> coeff;

  long long at(Subset f) const;
  void add(Subset f, long long v);
  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  friend Character operator*(long long c, Character ch);
  bool operator==(const Character&) const = default;
  bool dominates(const Character& o) const;  // >= coefficientwise
  bool nonnegative() const;
  std::string to_string() const;
};

// One graded piece B(M(F)/E) of the datum, in ambient monomials.
struct PairData {
  Subset lower = 0, upper = 0;     // E and F as element sets, E within F
  std::vector<Subset> monomials;   // bases of M(F)/E, ascending mask order
  MatZ u_basis;                    // saturated integer kernel of the boundary
  MatZ ucheck_basis;               // saturated integer kernel of delta
  MatQ gram_u;                     // pairing Gram on u_basis columns
  // filled when the field is F_p (kernels taken directly mod p):
  MatI u_basis_p;
  MatI ucheck_basis_p;
  MatI gram_u_p;

  Index dim() const { return static_cast<Index>(monomials.size()); }
  Index qdim_u() const { return u_basis.cols(); }
  Index qdim_ucheck() const { return ucheck_basis.cols(); }
};

// Standalone piece construction for arbitrary nested subsets (the datum uses
// nested cyclic flats; lemma checks also feed plain flats or the full set).
PairData build_pair_data(const Matroid& m, const Weights& a, Subset e, Subset f,
                         FieldSpec field = FieldSpec::rationals());

class RingelDatum {
 public:
  RingelDatum(Matroid m, Weights a, FieldSpec field, CyclicFlats poset,
              std::map<std::pair<Subset, Subset>, PairData> pairs)
      : m_(std::move(m)), a_(std::move(a)), field_(field), poset_(std::move(poset)),
        pairs_(std::move(pairs)) {}

  const Matroid& matroid() const { return m_; }
  const Weights& weights() const { return a_; }
  const FieldSpec& field() const { return field_; }
  const CyclicFlats& poset() const { return poset_; }
  const std::map<std::pair<Subset, Subset>, PairData>& pairs() const { return pairs_; }

  bool nested_pair(Subset e, Subset f) const;
  const PairData& pair_data(Subset e, Subset f) const;
  long long dim_u(Subset e, Subset f) const;       // over Q (integer kernel width)
  long long dim_ucheck(Subset e, Subset f) const;
  void require_flat(Subset e) const;  // throws FlatNotInPoset

 private:
  Matroid m_;
  Weights a_;
  FieldSpec field_;
  CyclicFlats poset_;
  std::map<std::pair<Subset, Subset>, PairData> pairs_;
};

RingelDatum build_datum(const Matroid& m, const Weights& a,
                        FieldSpec field = FieldSpec::rationals());

struct AxiomReport {
  bool a1 = false;
  bool a2 = false;
  bool a3 = false;
  bool subrings = false;
  bool u_perp_ucheck = false;          // U(E,F) orthogonal to Ucheck(E,F)
  bool uperp_is_im_delta_h = false;    // U^perp = Im(delta_h)
  bool contraction_stability = false;  // e_S -| u lands in U(M/cl(S))
  std::vector<std::string> violations;

  bool all_pass() const {
    return a1 && a2 && a3 && subrings && u_perp_ucheck && uperp_is_im_delta_h &&
           contraction_stability;
  }
};

// Verifies A1-A3 plus the subspace lemmas over Q; violations are reported,
// not thrown.
AxiomReport check_axioms(const RingelDatum& d);

Character standard_character(const RingelDatum& d, Subset e);
Character simple_character(const RingelDatum& d, Subset e);

struct DecompMatrix {
  // (E,F) with E within F -> [Delta(E):L(F)]
  std::map<std::pair<Subset, Subset>, long long> entries;
  long long at(Subset e, Subset f) const;
  bool is_identity() const;
};
DecompMatrix decomposition_matrix(const RingelDatum& d);

struct BadPrimes {
  std::set<std::int64_t> primes;
  // connected nested pairs whose weight sum vanishes identically (degenerate
  // over every field, including Q)
  std::vector<std::pair<Subset, Subset>> zero_sums;
};
BadPrimes bad_primes(const Matroid& m, const Weights& a);
bool semisimple_test(const Matroid& m, const Weights& a, std::int64_t p);

struct DetFactorization {
  struct Factor {
    Subset flat = 0;
    Int base;
    long long exponent = 0;
  };
  std::vector<Factor> factors;
  Rat product;
};

// Determinant of the pairing on a saturated integer basis of U(M(F)/E).
Rat gram_det_u(const Matroid& m, const Weights& a);
Rat gram_det_u_pair(const Matroid& m, const Weights& a, Subset e, Subset f);
// Determinant formula over the coloop-free flats of the minor.
DetFactorization bv_predicted(const Matroid& m, const Weights& a);
DetFactorization bv_predicted_pair(const Matroid& m, const Weights& a, Subset e, Subset f);

struct JantzenSum {
  std::map<Subset, long long> coefficients;  // flat K -> multiplier of ch Delta(K)
  Character resolved;
};
JantzenSum jantzen_rhs(const RingelDatum& d, std::int64_t p, Subset e);

struct IdentityReport {
  bool dimension_identity = false;  // KRS flat sum
  long long bases_count = 0;
  long long flat_sum = 0;
  bool springer_refinement = false;  // cyclic-flat kernel-dimension refinement
  long long springer_sum = 0;
  bool tutte_convolution = false;
  bool all_pass() const { return dimension_identity && springer_refinement && tutte_convolution; }
};
IdentityReport krs_checks(const Matroid& m);

struct AlgebraDims {
  long long dim_r = 0;
  long long dim_rcheck = 0;
  std::map<std::pair<Subset, Subset>, long long> r_blocks;
  std::map<std::pair<Subset, Subset>, long long> rcheck_blocks;
};
AlgebraDims algebra_dims(const RingelDatum& d);

struct OperatorModel {
  Index dim_b = 0;
  std::vector<std::pair<Subset, Subset>> piece_order;
  std::vector<Index> piece_offset;
  std::vector<MatQ> r_generators;       // left mult and left contraction by U bases
  std::vector<MatQ> rcheck_generators;  // right mult and right contraction by Ucheck bases
};
OperatorModel operator_model(const RingelDatum& d, Index cap = 40);

struct TiltingCheck {
  bool pass = false;
  Character lhs;  // F -> dim piece(E,F)
  Character rhs;  // sum of dim Ucheck(E,G) * ch Delta(G)
};
TiltingCheck tilting_character_check(const RingelDatum& d, Subset e);

}  // namespace matschur
