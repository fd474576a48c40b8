#include "matschur/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace matschur {

namespace {

// one extended-gcd column transform: (cj, ck) <- (x*cj + y*ck, -b/g*cj + a/g*ck)
void gcd_column_step(MatZ& m, MatZ& u, Index row, Index j, Index k) {
  Int a = m(row, j), b = m(row, k);
  Int g, x, y;
  // boost's gcd has no extended form for mpz_int; do it by hand
  {
    Int r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
      Int q = r0 / r1;
      Int t = r0 - q * r1; r0 = r1; r1 = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
      t = y0 - q * y1; y0 = y1; y1 = t;
    }
    g = r0; x = x0; y = y0;
  }
  if (g < 0) { g = -g; x = -x; y = -y; }
  Int aq = a / g, bq = b / g;
  for (Index i = 0; i < m.rows(); ++i) {
    Int cj = m(i, j), ck = m(i, k);
    m(i, j) = x * cj + y * ck;
    m(i, k) = -bq * cj + aq * ck;
  }
  for (Index i = 0; i < u.rows(); ++i) {
    Int cj = u(i, j), ck = u(i, k);
    u(i, j) = x * cj + y * ck;
    u(i, k) = -bq * cj + aq * ck;
  }
}

void swap_cols(MatZ& m, MatZ& u, Index j, Index k) {
  m.col(j).swap(m.col(k));
  u.col(j).swap(u.col(k));
}

void negate_col(MatZ& m, MatZ& u, Index j) {
  m.col(j) = -m.col(j);
  u.col(j) = -u.col(j);
}

void axpy_col(MatZ& m, MatZ& u, Index dst, Index src, const Int& c) {
  m.col(dst) += c * m.col(src);
  u.col(dst) += c * u.col(src);
}

}  // namespace

Index rank_of(const MatZ& a) {
  MatZ m = a;
  const Index rows = m.rows(), cols = m.cols();
  Int prev = 1;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pr = -1;
    for (Index i = r; i < rows; ++i)
      if (m(i, c) != 0) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    const Int piv = m(r, c);
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j)
        m(i, j) = (m(i, j) * piv - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

MatZ clear_denominators(const MatQ& a) {
  MatZ out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    Int l = 1;
    for (Index j = 0; j < a.cols(); ++j) l = lcm(l, denominator(a(i, j)));
    for (Index j = 0; j < a.cols(); ++j)
      out(i, j) = numerator(a(i, j)) * (l / denominator(a(i, j)));
  }
  return out;
}

Index rank_of(const MatQ& a) { return rank_of(clear_denominators(a)); }

Index rank_mod_p(const MatI& a, std::int64_t p) {
  MatI m = a;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pr = -1;
    for (Index i = r; i < rows; ++i)
      if (m(i, c) % p != 0) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    std::int64_t inv = mod_inv(m(r, c), p);
    for (Index j = c; j < cols; ++j) m(r, j) = mod_mul(mod_normalize(m(r, j), p), inv, p);
    for (Index i = r + 1; i < rows; ++i) {
      std::int64_t f = mod_normalize(m(i, c), p);
      if (f == 0) continue;
      for (Index j = c; j < cols; ++j)
        m(i, j) = mod_normalize(m(i, j) - mod_mul(f, m(r, j), p), p);
    }
    ++r;
  }
  return r;
}

Int determinant(const MatZ& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("NotSquare");
  const Index n = a.rows();
  if (n == 0) return 1;
  MatZ m = a;
  Int prev = 1;
  int sign = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Index pr = -1;
      for (Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) { pr = i; break; }
      if (pr < 0) return 0;
      m.row(k).swap(m.row(pr));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rat determinant(const MatQ& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("NotSquare");
  if (a.rows() == 0) return 1;
  // scale rows to integers, divide the scales back out
  MatZ z(a.rows(), a.cols());
  Int scale = 1;
  for (Index i = 0; i < a.rows(); ++i) {
    Int l = 1;
    for (Index j = 0; j < a.cols(); ++j) l = lcm(l, denominator(a(i, j)));
    for (Index j = 0; j < a.cols(); ++j)
      z(i, j) = numerator(a(i, j)) * (l / denominator(a(i, j)));
    scale *= l;
  }
  return Rat(determinant(z), scale);
}

std::int64_t determinant_mod_p(const MatI& a, std::int64_t p) {
  if (a.rows() != a.cols()) throw std::invalid_argument("NotSquare");
  MatI m = a;
  const Index n = m.rows();
  std::int64_t det = 1;
  for (Index c = 0; c < n; ++c) {
    Index pr = -1;
    for (Index i = c; i < n; ++i)
      if (m(i, c) % p != 0) { pr = i; break; }
    if (pr < 0) return 0;
    if (pr != c) {
      m.row(pr).swap(m.row(c));
      det = mod_normalize(-det, p);
    }
    std::int64_t piv = mod_normalize(m(c, c), p);
    det = mod_mul(det, piv, p);
    std::int64_t inv = mod_inv(piv, p);
    for (Index i = c + 1; i < n; ++i) {
      std::int64_t f = mod_mul(mod_normalize(m(i, c), p), inv, p);
      if (f == 0) continue;
      for (Index j = c; j < n; ++j)
        m(i, j) = mod_normalize(m(i, j) - mod_mul(f, m(c, j), p), p);
    }
  }
  return det;
}

MatQ kernel_basis(const MatQ& a) {
  MatQ m = a;
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Index> pivot_col;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pr = -1;
    for (Index i = r; i < rows; ++i)
      if (m(i, c) != 0) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    Rat inv = Rat(1) / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (Index c : pivot_col) is_pivot[c] = true;
  MatQ k(cols, cols - r);
  k.setZero();
  Index out = 0;
  for (Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    k(c, out) = 1;
    for (Index i = 0; i < r; ++i) k(pivot_col[i], out) = -m(i, c);
    ++out;
  }
  return k;
}

MatI kernel_mod_p(const MatI& a, std::int64_t p) {
  MatI m(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) m(i, j) = mod_normalize(a(i, j), p);
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Index> pivot_col;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pr = -1;
    for (Index i = r; i < rows; ++i)
      if (m(i, c) != 0) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    std::int64_t inv = mod_inv(m(r, c), p);
    for (Index j = c; j < cols; ++j) m(r, j) = mod_mul(m(r, j), inv, p);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      std::int64_t f = m(i, c);
      for (Index j = c; j < cols; ++j)
        m(i, j) = mod_normalize(m(i, j) - mod_mul(f, m(r, j), p), p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (Index c : pivot_col) is_pivot[c] = true;
  MatI k(cols, cols - r);
  k.setZero();
  Index out = 0;
  for (Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    k(c, out) = 1;
    for (Index i = 0; i < r; ++i) k(pivot_col[i], out) = mod_normalize(-m(i, c), p);
    ++out;
  }
  return k;
}

HermiteResult hermite_normal_form(const MatZ& a) {
  const Index rows = a.rows(), cols = a.cols();
  HermiteResult res{a, MatZ::Identity(cols, cols)};
  MatZ& h = res.h;
  MatZ& u = res.u;
  Index pc = 0;
  for (Index r = 0; r < rows && pc < cols; ++r) {
    for (Index j = pc + 1; j < cols; ++j) {
      if (h(r, j) == 0) continue;
      if (h(r, pc) == 0) {
        swap_cols(h, u, pc, j);
        continue;
      }
      gcd_column_step(h, u, r, pc, j);
    }
    if (h(r, pc) == 0) continue;
    if (h(r, pc) < 0) negate_col(h, u, pc);
    for (Index j = 0; j < pc; ++j) {
      // reduce earlier columns against the new pivot (floored quotient)
      Int q = h(r, j) / h(r, pc);
      if (h(r, j) - q * h(r, pc) < 0) q -= 1;
      if (q != 0) axpy_col(h, u, j, pc, -q);
    }
    ++pc;
  }
  return res;
}

MatZ integer_kernel_saturated(const MatZ& a) {
  HermiteResult res = hermite_normal_form(a);
  std::vector<Index> zero_cols;
  for (Index j = 0; j < res.h.cols(); ++j) {
    bool zero = true;
    for (Index i = 0; i < res.h.rows() && zero; ++i) zero = (res.h(i, j) == 0);
    if (zero) zero_cols.push_back(j);
  }
  MatZ k(a.cols(), static_cast<Index>(zero_cols.size()));
  for (std::size_t i = 0; i < zero_cols.size(); ++i) k.col(i) = res.u.col(zero_cols[i]);
  return k;
}

std::vector<Int> smith_elementary_divisors(const MatZ& a) {
  MatZ m = a;
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Int> divisors;
  Index top = 0;
  while (top < rows && top < cols) {
    bool nonzero = false;
    for (Index i = top; i < rows && !nonzero; ++i)
      for (Index j = top; j < cols && !nonzero; ++j)
        if (m(i, j) != 0) {
          m.row(top).swap(m.row(i));
          m.col(top).swap(m.col(j));
          nonzero = true;
        }
    if (!nonzero) break;
    bool again = true;
    while (again) {
      again = false;
      for (Index i = top + 1; i < rows; ++i) {
        if (m(i, top) == 0) continue;
        if (m(i, top) % m(top, top) == 0) {
          Int q = m(i, top) / m(top, top);
          m.row(i) -= q * m.row(top);
        } else {
          // row gcd step
          Int aa = m(top, top), bb = m(i, top);
          Int r0 = aa, r1 = bb, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
          while (r1 != 0) {
            Int q = r0 / r1;
            Int t = r0 - q * r1; r0 = r1; r1 = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
            t = y0 - q * y1; y0 = y1; y1 = t;
          }
          MatZ rt = x0 * m.row(top) + y0 * m.row(i);
          MatZ ri = (-bb / r0) * m.row(top) + (aa / r0) * m.row(i);
          m.row(top) = rt;
          m.row(i) = ri;
          again = true;
        }
      }
      for (Index j = top + 1; j < cols; ++j) {
        if (m(top, j) == 0) continue;
        if (m(top, j) % m(top, top) == 0) {
          Int q = m(top, j) / m(top, top);
          m.col(j) -= q * m.col(top);
        } else {
          Int aa = m(top, top), bb = m(top, j);
          Int r0 = aa, r1 = bb, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
          while (r1 != 0) {
            Int q = r0 / r1;
            Int t = r0 - q * r1; r0 = r1; r1 = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
            t = y0 - q * y1; y0 = y1; y1 = t;
          }
          MatZ ct = x0 * m.col(top) + y0 * m.col(j);
          MatZ cj = (-bb / r0) * m.col(top) + (aa / r0) * m.col(j);
          m.col(top) = ct;
          m.col(j) = cj;
          again = true;
        }
      }
    }
    // ensure divisibility into the remaining block
    bool fixed = false;
    for (Index i = top + 1; i < rows && !fixed; ++i)
      for (Index j = top + 1; j < cols && !fixed; ++j)
        if (m(i, j) % m(top, top) != 0) {
          m.row(top) += m.row(i);
          fixed = true;
        }
    if (fixed) continue;
    Int d = m(top, top);
    if (d < 0) d = -d;
    divisors.push_back(d);
    ++top;
  }
  return divisors;
}

bool is_saturated_lattice(const MatZ& columns) {
  if (columns.cols() == 0) return true;
  auto divs = smith_elementary_divisors(columns);
  if (static_cast<Index>(divs.size()) != columns.cols()) return false;  // not full column rank
  return std::all_of(divs.begin(), divs.end(), [](const Int& d) { return d == 1; });
}

namespace {

// incremental row space over Q: rows kept reduced, pivots tracked
struct RowSpace {
  std::vector<VecQ> rows;
  std::vector<Index> pivots;

  bool insert(VecQ v) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rat& c = v(pivots[i]);
      if (c != 0) v -= c * rows[i];
    }
    Index p = -1;
    for (Index j = 0; j < v.size(); ++j)
      if (v(j) != 0) { p = j; break; }
    if (p < 0) return false;
    v /= v(p);
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
  Index dim() const { return static_cast<Index>(rows.size()); }
};

VecQ vectorize(const MatQ& m) {
  VecQ v(m.size());
  Index k = 0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) v(k++) = m(i, j);
  return v;
}

}  // namespace

Index span_dimension(const std::vector<MatQ>& gens, bool closed_under_product) {
  if (gens.empty()) return 0;
  const Index rows = gens.front().rows(), cols = gens.front().cols();
  for (const auto& g : gens)
    if (g.rows() != rows || g.cols() != cols)
      throw std::invalid_argument("span_dimension: shape mismatch");
  RowSpace space;
  if (!closed_under_product) {
    for (const auto& g : gens) space.insert(vectorize(g));
    return space.dim();
  }
  if (rows != cols) throw std::invalid_argument("span_dimension: product closure needs square matrices");
  std::vector<MatQ> worklist;
  auto push = [&](const MatQ& m) {
    if (space.insert(vectorize(m))) worklist.push_back(m);
  };
  push(MatQ::Identity(rows, cols));
  for (const auto& g : gens) push(g);
  for (std::size_t head = 0; head < worklist.size(); ++head) {
    MatQ current = worklist[head];  // copy: worklist may reallocate
    for (const auto& g : gens) push(g * current);
  }
  return space.dim();
}

Index centralizer_dimension(const std::vector<MatQ>& ops, Index d) {
  for (const auto& g : ops)
    if (g.rows() != d || g.cols() != d)
      throw std::invalid_argument("centralizer_dimension: shape mismatch");
  if (ops.empty()) return d * d;
  // unknown X is vectorized column-major; constraints XG - GX = 0
  MatQ sys(static_cast<Index>(ops.size()) * d * d, d * d);
  sys.setZero();
  Index row = 0;
  for (const auto& g : ops) {
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) {
        for (Index k = 0; k < d; ++k) {
          sys(row, k * d + i) += g(k, j);   // X(i,k) g(k,j)
          sys(row, j * d + k) -= g(i, k);   // -g(i,k) X(k,j)
        }
        ++row;
      }
  }
  return d * d - rank_of(sys);
}

}  // namespace matschur
