#include <doctest.h>

#include "matschur/matroid.hpp"

using namespace matschur;

namespace {

// independent Tutte oracle by deletion-contraction
TuttePoly tutte_dc(const Matroid& m) {
  if (m.size() == 0) {
    TuttePoly one;
    one.coeff[{0, 0}] = 1;
    return one;
  }
  int e = 0;
  Subset em = 1u << e;
  Subset rest = m.ground() & ~em;
  if (m.rank(em) == 0) {  // loop: y * T(M \ e)
    TuttePoly t = tutte_dc(m.minor(0, rest).matroid);
    TuttePoly y;
    y.coeff[{0, 1}] = 1;
    return y * t;
  }
  if (contains(m.coloops(), e)) {  // coloop: x * T(M / e)
    TuttePoly t = tutte_dc(m.minor(em, m.ground()).matroid);
    TuttePoly x;
    x.coeff[{1, 0}] = 1;
    return x * t;
  }
  TuttePoly del = tutte_dc(m.minor(0, rest).matroid);
  TuttePoly con = tutte_dc(m.minor(em, m.ground()).matroid);
  del += con;
  return del;
}

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("from_bases validates the axioms") {
  Matroid u12 = Matroid::from_bases(2, {1u << 0, 1u << 1});
  CHECK(u12.rank() == 1);
  CHECK(u12.bases().size() == 2);
  CHECK_THROWS_WITH_AS(Matroid::from_bases(2, {1u << 0, 0b11}),
                       doctest::Contains("EqualCardinalityViolation"), MatroidError);
  CHECK_THROWS_WITH_AS(Matroid::from_bases(4, {0b0011, 0b1100}),
                       doctest::Contains("ExchangeViolation"), MatroidError);
  CHECK_THROWS_WITH_AS(Matroid::from_bases(2, {}), doctest::Contains("EmptyBasisList"),
                       MatroidError);
}

TEST_CASE("from_graph spanning forests") {
  Matroid m = k4();
  CHECK(m.size() == 6);
  CHECK(m.rank() == 3);
  CHECK(m.bases().size() == 16);  // Cayley: 4^2 spanning trees
  Matroid coloop = Matroid::from_graph(2, {{0, 1}});
  CHECK(coloop.bases() == std::vector<Subset>{1u});
  Matroid loop = Matroid::from_graph(1, {{0, 0}});
  CHECK(loop.bases() == std::vector<Subset>{0u});
  CHECK_THROWS_AS(Matroid::from_graph(2, {{0, 5}}), MatroidError);
}

TEST_CASE("uniform matroids") {
  Matroid u13 = Matroid::uniform(1, 3);
  CHECK(u13.bases() == std::vector<Subset>{1, 2, 4});
  Matroid u02 = Matroid::uniform(0, 2);
  CHECK(u02.bases() == std::vector<Subset>{0});
  CHECK(u02.loops() == 0b11u);
  CHECK(Matroid::uniform(2, 3).bases() == u13.dual().bases());
  CHECK_THROWS_AS(Matroid::uniform(3, 2), MatroidError);
}

TEST_CASE("rank and closure") {
  Matroid m = k4();
  // edges 0=(01) 1=(02) 2=(03) 3=(12) 4=(13) 5=(23); {0,1,3} is a triangle
  CHECK(m.rank(0b001011u) == 2);
  CHECK(Matroid::uniform(2, 4).rank(1u) == 1);
  for (const auto& [name, lib] : library_matroids()) {
    CHECK(lib.rank(lib.ground()) == lib.rank());
    CAPTURE(name);
  }
  CHECK(Matroid::uniform(1, 3).closure(1u) == 0b111u);
  CHECK(Matroid::uniform(2, 4).closure(1u) == 1u);
  std::uint64_t seed = 42;
  for (const auto& [name, lib] : library_matroids()) {
    for (int t = 0; t < 10; ++t) {
      Subset s = static_cast<Subset>(splitmix(seed)) & lib.ground();
      CHECK(lib.closure(lib.closure(s)) == lib.closure(s));
    }
  }
}

TEST_CASE("rank is monotone and submodular") {
  std::uint64_t seed = 7;
  for (const auto& [name, m] : library_matroids()) {
    CAPTURE(name);
    for (int t = 0; t < 40; ++t) {
      Subset a = static_cast<Subset>(splitmix(seed)) & m.ground();
      Subset b = static_cast<Subset>(splitmix(seed)) & m.ground();
      CHECK(m.rank(a) <= popcount(a));
      CHECK(m.rank(a) <= m.rank(a | b));
      CHECK(m.rank(a) + m.rank(b) >= m.rank(a | b) + m.rank(a & b));
    }
  }
}

TEST_CASE("duality") {
  CHECK(Matroid::uniform(1, 3).dual().bases() == Matroid::uniform(2, 3).bases());
  Matroid coloop = Matroid::from_graph(2, {{0, 1}});
  CHECK(coloop.dual().loops() == 1u);
  CHECK(k4().dual().bases().size() == 16);
  for (const auto& [name, m] : library_matroids()) {
    CAPTURE(name);
    CHECK(m.dual().dual().bases() == m.bases());
  }
}

TEST_CASE("minors") {
  Matroid m = k4();
  Subset triangle = 0b001011u;  // edges 0,1,3 span vertices {0,1,2}
  CHECK(m.rank(triangle) == 2);
  auto contracted = m.minor(triangle, m.ground());
  CHECK(contracted.matroid.bases() == Matroid::uniform(1, 3).bases());
  for (const auto& [name, lib] : library_matroids()) {
    CAPTURE(name);
    CHECK(lib.minor(0, lib.ground()).matroid.bases() == lib.bases());
  }
  auto empty = Matroid::uniform(1, 4).minor(0, 0);
  CHECK(empty.matroid.size() == 0);
  CHECK(empty.matroid.bases() == std::vector<Subset>{0});
  CHECK_THROWS_AS(m.minor(0b11u, 0b01u), MatroidError);
}

TEST_CASE("contraction agrees with the double-dual formula") {
  std::uint64_t seed = 99;
  for (const auto& [name, m] : library_matroids()) {
    CAPTURE(name);
    for (int t = 0; t < 8; ++t) {
      Subset e = static_cast<Subset>(splitmix(seed)) & m.ground();
      auto direct = m.minor(e, m.ground()).matroid;
      auto via_dual = m.dual().minor(0, m.ground() & ~e).matroid.dual();
      CHECK(direct.bases() == via_dual.bases());
    }
  }
}

TEST_CASE("cyclic flats") {
  for (int n = 2; n <= 6; ++n) {
    CyclicFlats cf = Matroid::uniform(1, n).cyclic_flats();
    CHECK(cf.flats == std::vector<Subset>{0, full_set(n)});
  }
  CyclicFlats cf = k4().cyclic_flats();
  REQUIRE(cf.flats.size() == 6);
  CHECK(cf.flats.front() == 0);
  CHECK(cf.flats.back() == full_set(6));
  for (std::size_t i = 1; i <= 4; ++i) {
    CHECK(popcount(cf.flats[i]) == 3);
    CHECK(k4().rank(cf.flats[i]) == 2);
  }
  // loops sit at the bottom flat, coloops never enter a cyclic flat
  {
    Matroid loopy = Matroid::from_bases(3, {1u, 2u});  // U(1,2) plus a loop at 2
    CyclicFlats cf = loopy.cyclic_flats();
    CHECK(cf.flats == std::vector<Subset>{0b100u, 0b111u});
    CHECK(cf.loops_flat() == loopy.loops());
    Matroid coloopy = Matroid::from_bases(3, {0b011u, 0b101u});  // coloop at 0
    CyclicFlats cfc = coloopy.cyclic_flats();
    CHECK(cfc.flats == std::vector<Subset>{0, 0b110u});
    CHECK(cfc.coloop_complement_flat() == (coloopy.ground() & ~coloopy.coloops()));
  }
  // complementation is an inclusion-reversing bijection onto the dual's poset
  for (const auto& [name, m] : library_matroids()) {
    CAPTURE(name);
    std::vector<Subset> comp;
    for (Subset f : m.cyclic_flats().flats) comp.push_back(m.ground() & ~f);
    std::sort(comp.begin(), comp.end(), [](Subset a, Subset b) {
      return std::make_pair(popcount(a), a) < std::make_pair(popcount(b), b);
    });
    CHECK(comp == m.dual().cyclic_flats().flats);
  }
}

TEST_CASE("Tutte polynomial against deletion-contraction") {
  TuttePoly t12 = Matroid::uniform(1, 2).tutte();
  TuttePoly want12;
  want12.coeff[{1, 0}] = 1;
  want12.coeff[{0, 1}] = 1;
  CHECK(t12 == want12);
  TuttePoly t13 = Matroid::uniform(1, 3).tutte();
  TuttePoly want13;
  want13.coeff[{1, 0}] = 1;
  want13.coeff[{0, 1}] = 1;
  want13.coeff[{0, 2}] = 1;
  CHECK(t13 == want13);
  CHECK(k4().tutte()(1, 1) == 16);
  for (const auto& [name, m] : library_matroids()) {
    CAPTURE(name);
    CHECK(m.tutte() == tutte_dc(m));
    // duality swaps the variables
    TuttePoly td = m.dual().tutte();
    TuttePoly swapped;
    for (const auto& [deg, c] : td.coeff) swapped.coeff[{deg.second, deg.first}] = c;
    CHECK(m.tutte() == swapped);
  }
}

TEST_CASE("beta and mu+") {
  for (int n = 2; n <= 6; ++n) CHECK(Matroid::uniform(1, n).beta() == 1);
  CHECK(Matroid::uniform(0, 1).beta() == 0);  // single loop
  CHECK(k4().beta() == 2);
  CHECK(k4().mu_plus_dual() == 6);
  for (int n = 2; n <= 6; ++n) CHECK(Matroid::uniform(1, n).mu_plus() == 1);
  CHECK(Matroid::uniform(0, 1).mu_plus() == 0);
  for (const auto& [name, m] : library_matroids()) {
    CAPTURE(name);
    if (m.size() >= 2) CHECK(m.beta() == m.dual().beta());
    // passive-basis counts by direct enumeration
    long long ext_passive = 0, int_passive = 0;
    for (Subset b : m.bases()) {
      ActivityRecord rec = m.activities(b);
      if (rec.externally_active == 0) ++ext_passive;
      if (rec.internally_active == 0) ++int_passive;
    }
    CHECK(m.mu_plus() == ext_passive);
    CHECK(m.mu_plus_dual() == int_passive);
  }
}

TEST_CASE("activities") {
  Matroid m = Matroid::uniform(1, 3);
  CHECK(m.activities(1u).externally_active == 0);
  CHECK(m.activities(4u).externally_active == 0b011u);
  CHECK_THROWS_AS(m.activities(0b11u), MatroidError);
  for (const auto& [name, lib] : library_matroids()) {
    CAPTURE(name);
    TuttePoly sum;
    for (Subset b : lib.bases()) {
      ActivityRecord rec = lib.activities(b);
      sum.coeff[{popcount(rec.internally_active), popcount(rec.externally_active)}] += 1;
    }
    CHECK(sum == tutte_dc(lib));
  }
}

TEST_CASE("connectivity") {
  CHECK(Matroid::uniform(1, 2).connected());
  CHECK_FALSE(Matroid::from_bases(2, {0b11u}).connected());  // two coloops
  CHECK(k4().connected());
  CHECK(Matroid::uniform(1, 1).connected());
  CHECK(Matroid::uniform(0, 1).connected());  // single loop counts as connected
  CHECK_THROWS_AS(Matroid::uniform(0, 0).connected(), MatroidError);
}
