#include <doctest.h>

#include "matschur/linalg.hpp"

using namespace matschur;

namespace {

MatZ make_z(std::initializer_list<std::initializer_list<long long>> rows) {
  MatZ m(static_cast<Index>(rows.size()),
         rows.size() ? static_cast<Index>(rows.begin()->size()) : 0);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

MatQ to_q(const MatZ& z) {
  MatQ q(z.rows(), z.cols());
  for (Index i = 0; i < z.rows(); ++i)
    for (Index j = 0; j < z.cols(); ++j) q(i, j) = Rat(z(i, j));
  return q;
}

MatI make_i(std::initializer_list<std::initializer_list<long long>> rows) {
  MatI m(static_cast<Index>(rows.size()),
         rows.size() ? static_cast<Index>(rows.begin()->size()) : 0);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

MatZ random_z(Index r, Index c, std::uint64_t& seed) {
  MatZ m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = static_cast<long long>(splitmix(seed) % 11) - 5;
  return m;
}

}  // namespace

TEST_CASE("rank over the fields") {
  CHECK(rank_mod_p(make_i({{1, 1}, {1, 1}}), 2) == 1);
  CHECK(rank_of(MatZ(MatZ::Identity(5, 5))) == 5);
  CHECK(rank_of(to_q(make_z({{1, 2}, {2, 4}}))) == 1);
  // Gram of U(M_3) in the basis e0-e2, e1-e2 with unit weights
  MatI gram = make_i({{2, 1}, {1, 2}});
  CHECK(rank_mod_p(gram, 3) == 1);
  CHECK(rank_mod_p(gram, 2) == 2);
  std::uint64_t seed = 3;
  for (int t = 0; t < 20; ++t) {
    MatZ a = random_z(4, 6, seed);
    CHECK(rank_of(a) + kernel_basis(to_q(a)).cols() == a.cols());
  }
}

TEST_CASE("kernel bases") {
  MatQ a = to_q(make_z({{-1, -1}}));
  MatQ k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) * Rat(-1) == k(1, 0));  // spans (1,-1)
  CHECK(kernel_basis(to_q(make_z({{1, 0}, {0, 1}}))).cols() == 0);
  std::uint64_t seed = 11;
  for (int t = 0; t < 20; ++t) {
    MatZ z = random_z(3, 5, seed);
    MatQ kk = kernel_basis(to_q(z));
    MatQ prod = to_q(z) * kk;
    for (Index i = 0; i < prod.rows(); ++i)
      for (Index j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
  }
  MatI kp = kernel_mod_p(make_i({{1, 1}, {1, 1}}), 2);
  REQUIRE(kp.cols() == 1);
  CHECK((kp(0, 0) + kp(1, 0)) % 2 == 0);
}

TEST_CASE("saturated integer kernels") {
  MatZ k = integer_kernel_saturated(make_z({{2, -2}}));
  REQUIRE(k.cols() == 1);
  CHECK(abs(k(0, 0)) == 1);
  CHECK(k(0, 0) == k(1, 0));
  CHECK(is_saturated_lattice(k));
  // boundary of B(U_{1,3}): one row (-1,-1,-1)
  MatZ k3 = integer_kernel_saturated(make_z({{-1, -1, -1}}));
  CHECK(k3.cols() == 2);
  CHECK(is_saturated_lattice(k3));
  auto divs = smith_elementary_divisors(k3);
  REQUIRE(divs.size() == 2);
  CHECK(divs[0] == 1);
  CHECK(divs[1] == 1);
  std::uint64_t seed = 17;
  for (int t = 0; t < 15; ++t) {
    MatZ a = random_z(3, 6, seed);
    MatZ k6 = integer_kernel_saturated(a);
    MatZ prod = a * k6;
    for (Index i = 0; i < prod.rows(); ++i)
      for (Index j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
    CHECK(k6.cols() == a.cols() - rank_of(a));
    CHECK(is_saturated_lattice(k6));
  }
}

TEST_CASE("hermite form") {
  std::uint64_t seed = 23;
  for (int t = 0; t < 15; ++t) {
    MatZ a = random_z(4, 5, seed);
    HermiteResult res = hermite_normal_form(a);
    CHECK(a * res.u == res.h);
    Int du = determinant(res.u);
    CHECK(abs(du) == 1);
  }
}

TEST_CASE("determinants") {
  CHECK(determinant(make_z({{2, 1}, {1, 2}})) == 3);
  CHECK(determinant(MatZ(MatZ::Identity(4, 4))) == 1);
  CHECK(determinant_mod_p(make_i({{2, 1}, {1, 2}}), 3) == 0);
  MatQ q(2, 2);
  q << Rat(1, 2), Rat(1, 3), Rat(1, 4), Rat(1, 5);
  CHECK(determinant(q) == Rat(1, 10) - Rat(1, 12));
  std::uint64_t seed = 31;
  for (int t = 0; t < 10; ++t) {
    MatZ a = random_z(4, 4, seed), b = random_z(4, 4, seed);
    CHECK(determinant(MatZ(a * b)) == determinant(a) * determinant(b));
    CHECK(determinant(MatZ(a.transpose())) == determinant(a));
    CHECK((determinant(a) == 0) == (rank_of(a) < 4));
  }
  CHECK_THROWS_AS(determinant(make_z({{1, 2, 3}, {4, 5, 6}})), std::invalid_argument);
}

TEST_CASE("span dimension") {
  MatQ id = MatQ::Identity(3, 3);
  CHECK(span_dimension({id}, true) == 1);
  CHECK(span_dimension({id, 2 * id}, false) == 1);
  std::uint64_t seed = 41;
  std::vector<MatQ> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(to_q(random_z(3, 3, seed)));
  Index d1 = span_dimension(gens, true);
  std::vector<MatQ> shuffled{gens[2], gens[0], gens[1]};
  CHECK(span_dimension(shuffled, true) == d1);
  CHECK(d1 <= 9);
}

TEST_CASE("rank mod p matches the rational rank away from elementary divisors") {
  std::uint64_t seed = 57;
  for (int t = 0; t < 20; ++t) {
    MatZ a = random_z(4, 6, seed);
    auto divs = smith_elementary_divisors(a);
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
      bool divides = false;
      for (const Int& d : divs)
        if (d != 0 && d % p == 0) divides = true;
      if (divides) continue;
      MatI ap(a.rows(), a.cols());
      for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) ap(i, j) = mod_normalize(a(i, j), p);
      CHECK(rank_mod_p(ap, p) == rank_of(a));
    }
  }
}

TEST_CASE("centralizer dimension") {
  CHECK(centralizer_dimension({}, 3) == 9);
  CHECK(centralizer_dimension({MatQ(MatQ::Identity(3, 3))}, 3) == 9);
  // a matrix with distinct eigenvalues on the diagonal has diagonal centralizer
  MatQ diag = MatQ::Zero(3, 3);
  diag(0, 0) = 1;
  diag(1, 1) = 2;
  diag(2, 2) = 5;
  CHECK(centralizer_dimension({diag}, 3) == 3);
}
