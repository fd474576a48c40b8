#include "matschur/exterior.hpp"

#include <algorithm>

namespace matschur {

Weights::Weights(std::vector<std::int64_t> a) : a_(std::move(a)) {
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] == 0) throw WeightError("weight a(" + std::to_string(i) + ") must be nonzero");
}

Int Weights::product(Subset s) const {
  Int p = 1;
  for (int x : elements(s)) p *= a_[x];
  return p;
}

Rat Weights::inv_product(Subset s) const { return Rat(1) / Rat(product(s)); }

Int Weights::sum(Subset s) const {
  Int t = 0;
  for (int x : elements(s)) t += a_[x];
  return t;
}

void Weights::require_units_mod(std::int64_t p) const {
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] % p == 0)
      throw WeightError("WeightNotUnit: p=" + std::to_string(p) + " divides a(" +
                        std::to_string(i) + ")");
}

ExtVector ExtVector::monomial(Subset s, Rat c) {
  ExtVector v;
  if (c != 0) v.terms_[s] = std::move(c);
  return v;
}

Rat ExtVector::coefficient(Subset s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rat(0) : it->second;
}

void ExtVector::add_term(Subset s, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExtVector& ExtVector::operator+=(const ExtVector& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

ExtVector& ExtVector::operator-=(const ExtVector& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

ExtVector& ExtVector::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

std::string ExtVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += rat_to_string(c) + "*e" + subset_to_string(s);
  }
  return out;
}

ExtVector wedge(const ExtVector& x, const ExtVector& y) {
  ExtVector out;
  for (const auto& [s, cs] : x.terms())
    for (const auto& [t, ct] : y.terms()) {
      if (s & t) continue;
      out.add_term(s | t, Rat(eps_sign(s, t)) * cs * ct);
    }
  return out;
}

Rat pair(const ExtVector& x, const ExtVector& y, const Weights& a) {
  Rat total = 0;
  for (const auto& [s, cs] : x.terms()) {
    Rat cy = y.coefficient(s);
    if (cy != 0) total += cs * cy * a.inv_product(s);
  }
  return total;
}

ExtVector contract_left(const ExtVector& x, const ExtVector& y, const Weights& a) {
  // e_S -| e_T = eps(S, T\S) a(S)^{-1} e_{T\S} for S within T
  ExtVector out;
  for (const auto& [s, cs] : x.terms()) {
    Rat inv = a.inv_product(s);
    for (const auto& [t, ct] : y.terms()) {
      if (!subset_of(s, t)) continue;
      out.add_term(t & ~s, Rat(eps_sign(s, t & ~s)) * inv * cs * ct);
    }
  }
  return out;
}

ExtVector contract_right(const ExtVector& x, const ExtVector& y, const Weights& a) {
  // e_T |- e_S = eps(T\S, S) a(S)^{-1} e_{T\S} for S within T
  ExtVector out;
  for (const auto& [s, cs] : y.terms()) {
    Rat inv = a.inv_product(s);
    for (const auto& [t, ct] : x.terms()) {
      if (!subset_of(s, t)) continue;
      out.add_term(t & ~s, Rat(eps_sign(t & ~s, s)) * inv * cs * ct);
    }
  }
  return out;
}

ExtVector boundary(const ExtVector& x) {
  ExtVector out;
  for (const auto& [s, c] : x.terms()) {
    int i = 0;
    for (int e : elements(s)) {
      ++i;  // 1-based position, sign starts at (-1)^1
      out.add_term(s & ~(1u << e), Rat((i & 1) ? -1 : 1) * c);
    }
  }
  return out;
}

ExtVector delta(const ExtVector& x, const Weights& a, Subset ground) {
  // adjoint of the boundary under the weighted pairing; with the boundary
  // signs starting at (-1)^1 this is -sum a(s) s ^ e
  ExtVector out;
  for (const auto& [s, c] : x.terms())
    for (int e : elements(ground & ~s))
      out.add_term(s | (1u << e), Rat(-insert_sign(e, s) * a(e)) * c);
  return out;
}

namespace {

// split forms require a single (degree, rank) across all terms
void require_homogeneous(const Matroid& m, const ExtVector& x) {
  if (x.is_zero()) return;
  auto it = x.terms().begin();
  int deg = popcount(it->first), rk = m.rank(it->first);
  for (const auto& [s, c] : x.terms()) {
    (void)c;
    if (popcount(s) != deg || m.rank(s) != rk)
      throw InhomogeneousInput("split operator needs a (degree, rank) homogeneous input");
  }
}

ExtVector boundary_split(const Matroid& m, const ExtVector& x, bool rank_drops) {
  require_homogeneous(m, x);
  ExtVector out;
  for (const auto& [s, c] : x.terms()) {
    int rs = m.rank(s);
    int i = 0;
    for (int e : elements(s)) {
      ++i;
      Subset t = s & ~(1u << e);
      bool drops = m.rank(t) == rs - 1;
      if (drops != rank_drops) continue;
      out.add_term(t, Rat((i & 1) ? -1 : 1) * c);
    }
  }
  return out;
}

ExtVector delta_split(const Matroid& m, const ExtVector& x, const Weights& a, bool rank_raises) {
  require_homogeneous(m, x);
  ExtVector out;
  for (const auto& [s, c] : x.terms()) {
    int rs = m.rank(s);
    for (int e : elements(m.ground() & ~s)) {
      Subset t = s | (1u << e);
      bool raises = m.rank(t) == rs + 1;
      if (raises != rank_raises) continue;
      out.add_term(t, Rat(-insert_sign(e, s) * a(e)) * c);
    }
  }
  return out;
}

}  // namespace

ExtVector boundary_h(const Matroid& m, const ExtVector& x) { return boundary_split(m, x, true); }
ExtVector boundary_v(const Matroid& m, const ExtVector& x) { return boundary_split(m, x, false); }
ExtVector delta_h(const Matroid& m, const ExtVector& x, const Weights& a) {
  return delta_split(m, x, a, true);
}
ExtVector delta_v(const Matroid& m, const ExtVector& x, const Weights& a) {
  return delta_split(m, x, a, false);
}

ExtVector duality_map(const ExtVector& x, const Weights& a, Subset ground) {
  ExtVector out;
  for (const auto& [s, c] : x.terms()) {
    if (!subset_of(s, ground)) continue;
    Subset comp = ground & ~s;
    out.add_term(comp, Rat(eps_sign(s, comp)) * a.inv_product(s) * c);
  }
  return out;
}

GradedPiece monomial_basis(const Matroid& m, int p, int q) {
  GradedPiece piece{p, q, {}};
  for_each_subset_of_size(m.ground(), p, [&](Subset s) {
    if (m.rank(s) == q) piece.monomials.push_back(s);
  });
  std::sort(piece.monomials.begin(), piece.monomials.end());
  return piece;
}

MatZ boundary_matrix(const std::vector<Subset>& cols, const std::vector<Subset>& rows) {
  std::map<Subset, Index> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<Index>(i);
  MatZ m(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  m.setZero();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Subset s = cols[j];
    int i = 0;
    for (int e : elements(s)) {
      ++i;
      auto it = row_index.find(s & ~(1u << e));
      if (it != row_index.end()) m(it->second, static_cast<Index>(j)) = ((i & 1) ? -1 : 1);
    }
  }
  return m;
}

MatZ delta_matrix(const std::vector<Subset>& cols, const std::vector<Subset>& rows,
                  const Weights& a, Subset ground) {
  std::map<Subset, Index> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<Index>(i);
  MatZ m(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  m.setZero();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Subset s = cols[j];
    for (int e : elements(ground & ~s)) {
      auto it = row_index.find(s | (1u << e));
      if (it != row_index.end())
        m(it->second, static_cast<Index>(j)) = Int(-insert_sign(e, s)) * a(e);
    }
  }
  return m;
}

MatQ gram_matrix(const MatZ& columns, const std::vector<Subset>& monomials, const Weights& a) {
  const Index k = columns.cols();
  MatQ g(k, k);
  g.setZero();
  for (Index i = 0; i < k; ++i)
    for (Index j = i; j < k; ++j) {
      Rat v = 0;
      for (Index s = 0; s < columns.rows(); ++s) {
        if (columns(s, i) == 0 || columns(s, j) == 0) continue;
        v += Rat(columns(s, i) * columns(s, j)) * a.inv_product(monomials[s]);
      }
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

MatI gram_matrix_mod_p(const MatI& columns, const std::vector<Subset>& monomials,
                       const Weights& a, std::int64_t p) {
  const Index k = columns.cols();
  MatI g(k, k);
  g.setZero();
  for (Index i = 0; i < k; ++i)
    for (Index j = i; j < k; ++j) {
      std::int64_t v = 0;
      for (Index s = 0; s < columns.rows(); ++s) {
        if (columns(s, i) == 0 || columns(s, j) == 0) continue;
        std::int64_t inv = mod_inv(mod_normalize(a.product(monomials[s]), p), p);
        std::int64_t t = mod_mul(mod_normalize(columns(s, i), p),
                                 mod_normalize(columns(s, j), p), p);
        v = mod_normalize(v + mod_mul(t, inv, p), p);
      }
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

}  // namespace matschur
