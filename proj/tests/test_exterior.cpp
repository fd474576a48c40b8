#include <doctest.h>

#include "matschur/exterior.hpp"

using namespace matschur;

namespace {

ExtVector mono(Subset s) { return ExtVector::monomial(s); }

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

ExtVector random_vec(int n, std::uint64_t& seed) {
  ExtVector v;
  for (int t = 0; t < 4; ++t)
    v.add_term(static_cast<Subset>(splitmix(seed)) & full_set(n),
               Rat(static_cast<long long>(splitmix(seed) % 9) - 4));
  return v;
}

// contraction derived from the adjunction alone: the unique w on the full
// monomial basis with <w, z> = <y, x ^ z> for every monomial z
ExtVector contraction_by_adjunction(Subset x, Subset y, const Weights& a, int n) {
  ExtVector w;
  for (Subset z = 0; z <= full_set(n); ++z) {
    Rat rhs = pair(mono(y), wedge(mono(x), mono(z)), a);
    // <c e_z, e_z> = c / a(z)
    w.add_term(z, rhs * Rat(a.product(z)));
    if (z == full_set(n)) break;
  }
  return w;
}

}  // namespace

TEST_CASE("eps signs") {
  CHECK(eps_sign(1u << 1, 1u << 0) == -1);
  CHECK(eps_sign(0, 0b1011u) == 1);
  CHECK(eps_sign(0b0101u, 0b1010u) == -1);  // only the pair (2,1) inverts
}

TEST_CASE("wedge product") {
  CHECK(wedge(mono(2), mono(1)) == ExtVector::monomial(3, Rat(-1)));
  CHECK(wedge(mono(1), mono(3)).is_zero());
  CHECK(wedge(mono(1), mono(6)) == mono(7));
  std::uint64_t seed = 5;
  for (int t = 0; t < 30; ++t) {
    ExtVector x = random_vec(5, seed), y = random_vec(5, seed), z = random_vec(5, seed);
    CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
  }
  // graded commutativity on monomials
  for (Subset s = 0; s <= 15u; ++s)
    for (Subset t = 0; t <= 15u; ++t) {
      int sign = (popcount(s) * popcount(t)) % 2 ? -1 : 1;
      CHECK(wedge(mono(s), mono(t)) == Rat(sign) * wedge(mono(t), mono(s)));
    }
}

TEST_CASE("pairing") {
  Weights a{{2, 3}};
  CHECK(pair(mono(1), mono(1), a) == Rat(1, 2));
  CHECK(pair(mono(1), mono(2), a) == 0);
  CHECK(pair(mono(3), mono(3), Weights::ones(2)) == 1);
}

TEST_CASE("contraction agrees with the adjunction") {
  Weights ones = Weights::ones(2);
  CHECK(contract_left(mono(1), mono(3), ones) == mono(2));
  CHECK(contract_left(mono(2), mono(1), ones).is_zero());
  Weights a{{3, 5, 2, 7}};
  for (Subset x = 0; x <= 15u; ++x)
    for (Subset y = 0; y <= 15u; ++y)
      CHECK(contract_left(mono(x), mono(y), a) == contraction_by_adjunction(x, y, a, 4));
  // b -| b = <b,b> 1
  for (Subset b = 0; b <= 15u; ++b)
    CHECK(contract_left(mono(b), mono(b), a) ==
          ExtVector::monomial(0, pair(mono(b), mono(b), a)));
  // right adjoint: <x |- y, z> = <x, z ^ y>
  std::uint64_t seed = 9;
  for (int t = 0; t < 40; ++t) {
    ExtVector x = random_vec(4, seed), y = random_vec(4, seed), z = random_vec(4, seed);
    CHECK(pair(contract_right(x, y, a), z, a) == pair(x, wedge(z, y), a));
    CHECK(pair(contract_left(x, y, a), z, a) == pair(y, wedge(x, z), a));
  }
}

TEST_CASE("boundary operator") {
  CHECK(boundary(mono(3)) == mono(1) - mono(2));
  CHECK(boundary(mono(1)) == Rat(-1) * mono(0));
  std::uint64_t seed = 13;
  for (int t = 0; t < 30; ++t) CHECK(boundary(boundary(random_vec(6, seed))).is_zero());
}

TEST_CASE("delta operator") {
  // adjoint convention: delta(e) = -sum a(s) s ^ e, pairing with the
  // boundary signs that start at (-1)^1
  Weights ones = Weights::ones(2);
  CHECK(delta(mono(0), ones, 0b11u) == Rat(-1) * (mono(1) + mono(2)));
  Weights a{{4, 7}};
  CHECK(delta(mono(1), a, 0b11u) == ExtVector::monomial(3, Rat(7)));
  std::uint64_t seed = 19;
  Weights w{{2, 3, 1, 5, 2, 7}};
  for (int t = 0; t < 30; ++t) {
    ExtVector x = random_vec(6, seed), y = random_vec(6, seed);
    CHECK(pair(delta(x, w, full_set(6)), y, w) == pair(x, boundary(y), w));
    CHECK(delta(delta(x, w, full_set(6)), w, full_set(6)).is_zero());
  }
}

TEST_CASE("duality map") {
  Weights a{{5, 3}};
  CHECK(duality_map(mono(1), a, 0b11u) == ExtVector::monomial(2, Rat(1, 5)));
  CHECK(duality_map(mono(0), Weights::ones(3), 0b111u) == mono(0b111u));
  Weights w{{2, 3, 1, 5, 2}};
  std::uint64_t seed = 23;
  for (int t = 0; t < 30; ++t) {
    int n = 5;
    Subset g = full_set(n);
    Subset s = static_cast<Subset>(splitmix(seed)) & g;
    int k = popcount(s);
    ExtVector v = mono(s);
    ExtVector lhs = delta(duality_map(v, w, g), w, g);
    ExtVector rhs = Rat((k + 1) % 2 ? -1 : 1) * duality_map(boundary(v), w, g);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("graded monomial bases") {
  GradedPiece p = monomial_basis(Matroid::uniform(2, 3), 2, 2);
  CHECK(p.monomials == std::vector<Subset>{3, 5, 6});
  for (const auto& [name, m] : library_matroids()) {
    CAPTURE(name);
    CHECK(monomial_basis(m, m.rank(), m.rank()).monomials.size() == m.bases().size());
  }
  CHECK(monomial_basis(Matroid::uniform(1, 3), 2, 1).monomials == std::vector<Subset>{3, 5, 6});
}

TEST_CASE("rank splittings") {
  Matroid m = k4();
  Weights a{{2, 3, 1, 5, 2, 7}};
  std::uint64_t seed = 29;
  for (int t = 0; t < 60; ++t) {
    Subset s = static_cast<Subset>(splitmix(seed)) & m.ground();
    ExtVector x = mono(s);
    CHECK(boundary_h(m, x) + boundary_v(m, x) == boundary(x));
    CHECK(delta_h(m, x, a) + delta_v(m, x, a) == delta(x, a, m.ground()));
  }
  // a homogeneous two-term combination
  {
    ExtVector x = mono(m.bases()[0]) + Rat(3) * mono(m.bases()[5]);
    CHECK(boundary_h(m, x) + boundary_v(m, x) == boundary(x));
  }
  // on B(M) the boundary is pure h and delta is pure v
  for (Subset b : m.bases()) {
    CHECK(boundary_v(m, mono(b)).is_zero());
    CHECK(delta_h(m, mono(b), a).is_zero());
  }
  // mixed degree or rank is rejected by the split forms
  ExtVector mixed = mono(1) + mono(0b11u);
  CHECK_THROWS_AS(boundary_h(m, mixed), InhomogeneousInput);
  ExtVector mixed_rank = mono(0b001011u) + mono(0b000111u);  // triangle vs spanning tree
  CHECK_THROWS_AS(delta_v(m, mixed_rank, a), InhomogeneousInput);
}

TEST_CASE("eps sign rejects overlapping sets") {
  CHECK_THROWS_AS(eps_sign(0b11u, 0b10u), std::invalid_argument);
}

TEST_CASE("matrix builders agree with the vector operations") {
  Matroid m = Matroid::uniform(2, 4);
  Weights a{{3, 1, 2, 5}};
  GradedPiece top = monomial_basis(m, 2, 2);
  GradedPiece below = monomial_basis(m, 1, 1);
  MatZ bm = boundary_matrix(top.monomials, below.monomials);
  for (std::size_t j = 0; j < top.monomials.size(); ++j) {
    ExtVector v = boundary(mono(top.monomials[j]));
    for (std::size_t i = 0; i < below.monomials.size(); ++i)
      CHECK(Rat(bm(static_cast<Index>(i), static_cast<Index>(j))) ==
            v.coefficient(below.monomials[i]));
  }
  MatZ dm = delta_matrix(below.monomials, top.monomials, a, m.ground());
  for (std::size_t j = 0; j < below.monomials.size(); ++j) {
    ExtVector v = delta(mono(below.monomials[j]), a, m.ground());
    for (std::size_t i = 0; i < top.monomials.size(); ++i)
      CHECK(Rat(dm(static_cast<Index>(i), static_cast<Index>(j))) ==
            v.coefficient(top.monomials[i]));
  }
}

TEST_CASE("weights validate") {
  CHECK_THROWS_AS(Weights({1, 0, 2}), WeightError);
  Weights a{{2, 3}};
  CHECK_THROWS_AS(a.require_units_mod(3), WeightError);
  CHECK_NOTHROW(a.require_units_mod(5));
  CHECK(a.product(0b11u) == 6);
  CHECK(a.inv_product(0b11u) == Rat(1, 6));
  CHECK(a.sum(0b11u) == 5);
}
