#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace matschur {

// Ground-set subsets are bitmasks over elements 0..n-1, n <= 24.
using Subset = std::uint32_t;

constexpr int kMaxGroundSize = 24;

inline int popcount(Subset s) { return std::popcount(s); }

inline Subset full_set(int n) { return n == 0 ? 0u : ((1u << n) - 1u); }

inline bool contains(Subset s, int x) { return (s >> x) & 1u; }

inline bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

inline std::vector<int> elements(Subset s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  while (s) {
    int x = std::countr_zero(s);
    out.push_back(x);
    s &= s - 1;
  }
  return out;
}

inline Subset make_subset(const std::vector<int>& xs) {
  Subset s = 0;
  for (int x : xs) s |= (1u << x);
  return s;
}

// Number of pairs (s,t) in S x T with s > t, mod 2, as a sign.
inline int eps_sign(Subset s, Subset t) {
  if (s & t) throw std::invalid_argument("OverlappingSets: eps sign needs disjoint arguments");
  int inv = 0;
  Subset tt = t;
  while (tt) {
    int x = std::countr_zero(tt);
    inv += popcount(s >> (x + 1));
    tt &= tt - 1;
  }
  return (inv & 1) ? -1 : +1;
}

// Sign of e_x ^ e_S for x not in S: counts the elements of S below x.
inline int insert_sign(int x, Subset s) {
  return (popcount(s & ((1u << x) - 1u)) & 1) ? -1 : +1;
}

// Visits every k-subset of the set bits of `universe`.
template <class Fn>
void for_each_subset_of_size(Subset universe, int k, Fn&& fn) {
  std::vector<int> el = elements(universe);
  int m = static_cast<int>(el.size());
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(Subset{0});
    return;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Subset s = 0;
    for (int i : idx) s |= (1u << el[i]);
    fn(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Visits every sub-mask of `universe` (including 0 and universe itself).
template <class Fn>
void for_each_submask(Subset universe, Fn&& fn) {
  Subset s = universe;
  while (true) {
    fn(s);
    if (s == 0) break;
    s = (s - 1) & universe;
  }
}

inline std::string subset_to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int x : elements(s)) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace matschur
