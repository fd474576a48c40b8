#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace matschur {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using MatI = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

// Canonical "num/den" form; plain "num" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Prime factorization by trial division; inputs here are small weight sums.
inline std::vector<std::int64_t> prime_divisors(Int v) {
  std::vector<std::int64_t> out;
  if (v < 0) v = -v;
  if (v <= 1) return out;
  for (Int d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d.convert_to<std::int64_t>());
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v.convert_to<std::int64_t>());
  return out;
}

inline long valuation(Int v, std::int64_t p) {
  if (v == 0) throw std::domain_error("valuation of zero");
  if (v < 0) v = -v;
  long k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

inline long valuation(const Rat& r, std::int64_t p) {
  return valuation(numerator(r), p) - valuation(denominator(r), p);
}

// ---- arithmetic mod a prime, value range [0, p) ----

inline std::int64_t mod_normalize(std::int64_t v, std::int64_t p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

inline std::int64_t mod_normalize(const Int& v, std::int64_t p) {
  Int r = v % p;
  if (r < 0) r += p;
  return r.convert_to<std::int64_t>();
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

inline std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod_normalize(a, p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("mod_inv: not invertible");
  return mod_normalize(t, p);
}

inline MatI reduce_mod_p(const MatZ& a, std::int64_t p) {
  MatI out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = mod_normalize(a(i, j), p);
  return out;
}

}  // namespace matschur
