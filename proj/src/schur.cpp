#include "matschur/schur.hpp"

#include <algorithm>

#include "matschur/parallel.hpp"

namespace matschur {

long long Character::at(Subset f) const {
  auto it = coeff.find(f);
  return it == coeff.end() ? 0 : it->second;
}

void Character::add(Subset f, long long v) {
  if (v == 0) return;
  auto [it, inserted] = coeff.try_emplace(f, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) coeff.erase(it);
  }
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [f, v] : o.coeff) add(f, v);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  for (const auto& [f, v] : o.coeff) add(f, -v);
  return *this;
}

Character operator*(long long c, Character ch) {
  if (c == 0) return Character{};
  for (auto& [f, v] : ch.coeff) v *= c;
  return ch;
}

bool Character::dominates(const Character& o) const {
  Character diff = *this;
  diff -= o;
  return diff.nonnegative();
}

bool Character::nonnegative() const {
  return std::all_of(coeff.begin(), coeff.end(), [](const auto& kv) { return kv.second >= 0; });
}

std::string Character::to_string() const {
  if (coeff.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [f, v] : coeff) {
    if (!first) out += " + ";
    first = false;
    if (v != 1) out += std::to_string(v) + "*";
    out += "e" + subset_to_string(f);
  }
  return out;
}

PairData build_pair_data(const Matroid& m, const Weights& a, Subset e, Subset f,
                         FieldSpec field) {
  if (!subset_of(e, f)) throw MatroidError("build_pair_data: need E within F");
  PairData pd;
  pd.lower = e;
  pd.upper = f;
  Subset ground = f & ~e;
  int base_rank = m.rank(e);
  int mr = m.rank(f) - base_rank;
  for_each_subset_of_size(ground, mr, [&](Subset s) {
    if (m.rank(e | s) == base_rank + mr) pd.monomials.push_back(s);
  });
  std::sort(pd.monomials.begin(), pd.monomials.end());

  std::vector<Subset> b_rows;  // independent in the minor, one element short
  for_each_subset_of_size(ground, mr - 1, [&](Subset s) {
    if (m.rank(e | s) == base_rank + mr - 1) b_rows.push_back(s);
  });
  std::vector<Subset> d_rows;  // one element past a basis, rank unchanged
  for_each_subset_of_size(ground, mr + 1, [&](Subset s) {
    if (m.rank(e | s) == base_rank + mr) d_rows.push_back(s);
  });

  MatZ bmat = boundary_matrix(pd.monomials, b_rows);
  MatZ dmat = delta_matrix(pd.monomials, d_rows, a, ground);
  pd.u_basis = integer_kernel_saturated(bmat);
  pd.ucheck_basis = integer_kernel_saturated(dmat);
  pd.gram_u = gram_matrix(pd.u_basis, pd.monomials, a);
  if (field.prime_field) {
    a.require_units_mod(field.p);
    pd.u_basis_p = kernel_mod_p(reduce_mod_p(bmat, field.p), field.p);
    pd.ucheck_basis_p = kernel_mod_p(reduce_mod_p(dmat, field.p), field.p);
    pd.gram_u_p = gram_matrix_mod_p(pd.u_basis_p, pd.monomials, a, field.p);
  }
  return pd;
}

RingelDatum build_datum(const Matroid& m, const Weights& a, FieldSpec field) {
  if (a.size() != m.size()) throw WeightError("weight vector length must equal ground-set size");
  if (field.prime_field) {
    if (!is_prime(field.p)) throw WeightError("modulus must be prime");
    a.require_units_mod(field.p);
  }
  CyclicFlats poset = m.cyclic_flats();
  std::vector<std::pair<Subset, Subset>> todo;
  for (Subset e : poset.flats)
    for (Subset f : poset.flats)
      if (subset_of(e, f)) todo.emplace_back(e, f);
  std::vector<PairData> built(todo.size());
  parallel_for(todo.size(), [&](std::size_t i) {
    built[i] = build_pair_data(m, a, todo[i].first, todo[i].second, field);
  });
  std::map<std::pair<Subset, Subset>, PairData> pairs;
  for (std::size_t i = 0; i < todo.size(); ++i) pairs.emplace(todo[i], std::move(built[i]));
  return RingelDatum(m, a, field, std::move(poset), std::move(pairs));
}

bool RingelDatum::nested_pair(Subset e, Subset f) const {
  return pairs_.count({e, f}) != 0;
}

const PairData& RingelDatum::pair_data(Subset e, Subset f) const {
  auto it = pairs_.find({e, f});
  if (it == pairs_.end())
    throw FlatNotInPoset("no piece for " + subset_to_string(e) + " within " + subset_to_string(f));
  return it->second;
}

long long RingelDatum::dim_u(Subset e, Subset f) const {
  return static_cast<long long>(pair_data(e, f).qdim_u());
}

long long RingelDatum::dim_ucheck(Subset e, Subset f) const {
  return static_cast<long long>(pair_data(e, f).qdim_ucheck());
}

void RingelDatum::require_flat(Subset e) const {
  if (!poset_.member(e))
    throw FlatNotInPoset(subset_to_string(e) + " is not a coloop-free flat");
}

// ---------------------------------------------------------------------------
// axiom suite
// ---------------------------------------------------------------------------

namespace {

ExtVector column_vector(const MatZ& basis, Index col, const std::vector<Subset>& monomials) {
  ExtVector v;
  for (Index s = 0; s < basis.rows(); ++s)
    if (basis(s, col) != 0) v.add_term(monomials[s], Rat(basis(s, col)));
  return v;
}

// coordinates of v in the given monomial list; false when support escapes it
bool coordinates(const ExtVector& v, const std::vector<Subset>& monomials, VecQ& out) {
  std::map<Subset, Index> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index[monomials[i]] = static_cast<Index>(i);
  out = VecQ::Zero(static_cast<Index>(monomials.size()));
  for (const auto& [s, c] : v.terms()) {
    auto it = index.find(s);
    if (it == index.end()) return false;
    out(it->second) = c;
  }
  return true;
}

// span membership over Q: v in column span of basis
bool in_span(const MatQ& basis, const VecQ& v) {
  bool zero = true;
  for (Index i = 0; i < v.size() && zero; ++i) zero = (v(i) == 0);
  if (zero) return true;
  MatQ aug(basis.rows(), basis.cols() + 1);
  aug.leftCols(basis.cols()) = basis;
  aug.col(basis.cols()) = v;
  return rank_of(aug) == rank_of(basis);
}

bool same_span(const MatQ& a, const MatQ& b) {
  if (a.rows() != b.rows()) return false;
  Index ra = rank_of(a), rb = rank_of(b);
  if (ra != rb) return false;
  MatQ joint(a.rows(), a.cols() + b.cols());
  joint.leftCols(a.cols()) = a;
  joint.rightCols(b.cols()) = b;
  return rank_of(joint) == ra;
}

MatQ to_q(const MatZ& z) {
  MatQ q(z.rows(), z.cols());
  for (Index i = 0; i < z.rows(); ++i)
    for (Index j = 0; j < z.cols(); ++j) q(i, j) = Rat(z(i, j));
  return q;
}

// orthogonal complement of the u-basis columns inside the piece, in piece
// coordinates (the pairing is diagonal on monomials)
MatQ piece_orthocomplement(const PairData& pd, const Weights& a) {
  const Index n = pd.dim(), k = pd.u_basis.cols();
  MatQ sys(k, n);
  for (Index i = 0; i < k; ++i)
    for (Index s = 0; s < n; ++s)
      sys(i, s) = Rat(pd.u_basis(s, i)) * a.inv_product(pd.monomials[s]);
  return kernel_basis(sys);
}

MatQ piece_orthocomplement_ucheck(const PairData& pd, const Weights& a) {
  const Index n = pd.dim(), k = pd.ucheck_basis.cols();
  MatQ sys(k, n);
  for (Index i = 0; i < k; ++i)
    for (Index s = 0; s < n; ++s)
      sys(i, s) = Rat(pd.ucheck_basis(s, i)) * a.inv_product(pd.monomials[s]);
  return kernel_basis(sys);
}

}  // namespace

AxiomReport check_axioms(const RingelDatum& d) {
  AxiomReport rep;
  rep.a1 = rep.a2 = rep.a3 = rep.subrings = rep.u_perp_ucheck = true;
  rep.uperp_is_im_delta_h = rep.contraction_stability = true;
  const Weights& a = d.weights();
  const auto& flats = d.poset().flats;
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    rep.violations.push_back(msg);
  };

  // A1: diagonal pieces are one-dimensional with <1,1> = 1; the contraction
  // of a piece against itself is the pairing times the unit.
  for (Subset e : flats) {
    const PairData& pd = d.pair_data(e, e);
    if (pd.dim() != 1 || pd.monomials[0] != 0 || pd.qdim_u() != 1 || pd.qdim_ucheck() != 1 ||
        pd.gram_u != MatQ::Identity(1, 1))
      fail(rep.a1, "A1: diagonal piece at " + subset_to_string(e) + " is not k*1");
  }
  for (const auto& [key, pd] : d.pairs()) {
    for (Subset s : pd.monomials)
      for (Subset t : pd.monomials) {
        ExtVector lhs = contract_left(ExtVector::monomial(s), ExtVector::monomial(t), a);
        Rat br = pair(ExtVector::monomial(s), ExtVector::monomial(t), a);
        ExtVector rhs = ExtVector::monomial(0, br);
        if (!(lhs == rhs)) {
          fail(rep.a1, "A1: contraction identity fails on piece " + subset_to_string(key.first) +
                           "->" + subset_to_string(key.second));
          break;
        }
      }
  }

  // A2 as exact span equalities, in both versions.
  for (const auto& [key, pd] : d.pairs()) {
    auto [e, f] = key;
    if (e == f) continue;
    std::vector<VecQ> rhs_u, rhs_uc;
    for (Subset g : flats) {
      if (!subset_of(e, g) || !subset_of(g, f)) continue;
      if (g != f) {
        // piece(E,G) * Ucheck(G,F) against U(E,F)^perp
        const PairData& left = d.pair_data(e, g);
        const PairData& right = d.pair_data(g, f);
        for (Subset b : left.monomials)
          for (Index j = 0; j < right.ucheck_basis.cols(); ++j) {
            ExtVector w = wedge(ExtVector::monomial(b),
                                column_vector(right.ucheck_basis, j, right.monomials));
            VecQ coords;
            if (!coordinates(w, pd.monomials, coords)) {
              fail(rep.a2, "A2: product escapes piece " + subset_to_string(e) + "->" +
                               subset_to_string(f));
              continue;
            }
            rhs_u.push_back(std::move(coords));
          }
      }
      if (g != e) {
        // U(E,G) * piece(G,F) against Ucheck(E,F)^perp
        const PairData& left = d.pair_data(e, g);
        const PairData& right = d.pair_data(g, f);
        for (Index j = 0; j < left.u_basis.cols(); ++j)
          for (Subset b : right.monomials) {
            ExtVector w = wedge(column_vector(left.u_basis, j, left.monomials),
                                ExtVector::monomial(b));
            VecQ coords;
            if (!coordinates(w, pd.monomials, coords)) {
              fail(rep.a2, "A2: product escapes piece " + subset_to_string(e) + "->" +
                               subset_to_string(f));
              continue;
            }
            rhs_uc.push_back(std::move(coords));
          }
      }
    }
    auto stack = [&](const std::vector<VecQ>& vs) {
      MatQ m(pd.dim(), static_cast<Index>(vs.size()));
      for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Index>(j)) = vs[j];
      return m;
    };
    if (!same_span(piece_orthocomplement(pd, a), stack(rhs_u)))
      fail(rep.a2, "A2: U^perp != B*Ucheck^+ on " + subset_to_string(e) + "->" +
                       subset_to_string(f));
    if (!same_span(piece_orthocomplement_ucheck(pd, a), stack(rhs_uc)))
      fail(rep.a2, "A2: Ucheck^perp != U^+*B on " + subset_to_string(e) + "->" +
                       subset_to_string(f));
  }

  // A3 on (u, monomial, ucheck) triples, reduced to each nested pair (X,W).
  for (const auto& [outer, outer_pd] : d.pairs()) {
    auto [x, w] = outer;
    (void)outer_pd;
    for (Subset ef : flats) {
      if (!subset_of(x, ef) || !subset_of(ef, w)) continue;
      for (Subset ff : flats) {
        if (!subset_of(x, ff) || !subset_of(ff, w)) continue;
        const PairData& pu = d.pair_data(x, ff);
        const PairData& pb = d.pair_data(x, ef);
        const PairData& pv = d.pair_data(ef, w);
        for (Index iu = 0; iu < pu.u_basis.cols(); ++iu) {
          ExtVector u = column_vector(pu.u_basis, iu, pu.monomials);
          for (Subset b : pb.monomials) {
            ExtVector eb = ExtVector::monomial(b);
            for (Index iv = 0; iv < pv.ucheck_basis.cols(); ++iv) {
              ExtVector uc = column_vector(pv.ucheck_basis, iv, pv.monomials);
              ExtVector lhs = wedge(contract_left(u, eb, a), uc);
              ExtVector rhs = contract_left(u, wedge(eb, uc), a);
              if (!(lhs == rhs)) {
                fail(rep.a3, "A3 fails at X=" + subset_to_string(x) + " W=" + subset_to_string(w) +
                                 " E=" + subset_to_string(ef) + " F=" + subset_to_string(ff));
                goto next_pairing;
              }
            }
          }
        }
      }
    }
  next_pairing:;
  }

  // Subring containments U*U in U and Ucheck*Ucheck in Ucheck.
  for (Subset e : flats)
    for (Subset f : flats) {
      if (!subset_of(e, f)) continue;
      for (Subset g : flats) {
        if (!subset_of(f, g)) continue;
        const PairData& ef = d.pair_data(e, f);
        const PairData& fg = d.pair_data(f, g);
        const PairData& eg = d.pair_data(e, g);
        MatQ u_span = to_q(eg.u_basis);
        MatQ uc_span = to_q(eg.ucheck_basis);
        for (Index i = 0; i < ef.u_basis.cols(); ++i)
          for (Index j = 0; j < fg.u_basis.cols(); ++j) {
            ExtVector w = wedge(column_vector(ef.u_basis, i, ef.monomials),
                                column_vector(fg.u_basis, j, fg.monomials));
            VecQ coords;
            if (!coordinates(w, eg.monomials, coords) || !in_span(u_span, coords)) {
              fail(rep.subrings, "U*U escapes U on " + subset_to_string(e) + "->" +
                                     subset_to_string(g));
            }
          }
        for (Index i = 0; i < ef.ucheck_basis.cols(); ++i)
          for (Index j = 0; j < fg.ucheck_basis.cols(); ++j) {
            ExtVector w = wedge(column_vector(ef.ucheck_basis, i, ef.monomials),
                                column_vector(fg.ucheck_basis, j, fg.monomials));
            VecQ coords;
            if (!coordinates(w, eg.monomials, coords) || !in_span(uc_span, coords)) {
              fail(rep.subrings, "Ucheck*Ucheck escapes Ucheck on " + subset_to_string(e) + "->" +
                                     subset_to_string(g));
            }
          }
      }
    }

  // U(E,F) and Ucheck(E,F) orthogonal for every nonempty minor.
  for (const auto& [key, pd] : d.pairs()) {
    if (key.first == key.second) continue;
    for (Index i = 0; i < pd.u_basis.cols(); ++i)
      for (Index j = 0; j < pd.ucheck_basis.cols(); ++j) {
        Rat v = 0;
        for (Index s = 0; s < pd.dim(); ++s)
          v += Rat(pd.u_basis(s, i) * pd.ucheck_basis(s, j)) * a.inv_product(pd.monomials[s]);
        if (v != 0)
          fail(rep.u_perp_ucheck, "U not orthogonal to Ucheck on " +
                                      subset_to_string(key.first) + "->" +
                                      subset_to_string(key.second));
      }
  }

  // U^perp = Im(delta_h) piecewise.
  const Matroid& m = d.matroid();
  for (const auto& [key, pd] : d.pairs()) {
    auto [e, f] = key;
    Subset ground = f & ~e;
    int base_rank = m.rank(e);
    int mr = m.rank(f) - base_rank;
    std::vector<Subset> below;
    for_each_subset_of_size(ground, mr - 1, [&](Subset s) {
      if (m.rank(e | s) == base_rank + mr - 1) below.push_back(s);
    });
    MatZ dh = delta_matrix(below, pd.monomials, a, ground);
    if (!same_span(piece_orthocomplement(pd, a), to_q(dh)))
      fail(rep.uperp_is_im_delta_h,
           "U^perp != Im(delta_h) on " + subset_to_string(e) + "->" + subset_to_string(f));
  }

  // Contraction stability on the ambient matroid: e_S -| u in U(M/cl(S)).
  {
    PairData top = build_pair_data(m, a, 0, m.ground());
    std::map<Subset, PairData> contraction_cache;
    for_each_submask(m.ground(), [&](Subset s) {
      if (!m.independent(s)) return;
      Subset cl = m.closure(s);
      auto it = contraction_cache.find(cl);
      if (it == contraction_cache.end())
        it = contraction_cache.emplace(cl, build_pair_data(m, a, cl, m.ground())).first;
      const PairData& target = it->second;
      MatQ span = to_q(target.u_basis);
      for (Index j = 0; j < top.u_basis.cols(); ++j) {
        ExtVector v = contract_left(ExtVector::monomial(s),
                                    column_vector(top.u_basis, j, top.monomials), a);
        if (v.is_zero()) continue;
        VecQ coords;
        if (!coordinates(v, target.monomials, coords) || !in_span(span, coords))
          fail(rep.contraction_stability,
               "contraction of U by e" + subset_to_string(s) + " escapes U(M/closure)");
      }
    });
  }

  return rep;
}

// ---------------------------------------------------------------------------
// characters and decomposition
// ---------------------------------------------------------------------------

Character standard_character(const RingelDatum& d, Subset e) {
  d.require_flat(e);
  Character ch;
  for (Subset f : d.poset().flats)
    if (subset_of(e, f)) ch.add(f, d.dim_u(e, f));
  return ch;
}

Character simple_character(const RingelDatum& d, Subset e) {
  d.require_flat(e);
  Character ch;
  for (Subset f : d.poset().flats) {
    if (!subset_of(e, f)) continue;
    const PairData& pd = d.pair_data(e, f);
    long long rk = d.field().prime_field
                       ? static_cast<long long>(rank_mod_p(pd.gram_u_p, d.field().p))
                       : static_cast<long long>(rank_of(pd.gram_u));
    ch.add(f, rk);
  }
  return ch;
}

long long DecompMatrix::at(Subset e, Subset f) const {
  auto it = entries.find({e, f});
  return it == entries.end() ? 0 : it->second;
}

bool DecompMatrix::is_identity() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& kv) {
    return kv.second == (kv.first.first == kv.first.second ? 1 : 0);
  });
}

namespace {

long long pair_gram_rank(const RingelDatum& d, Subset e, Subset f) {
  const PairData& pd = d.pair_data(e, f);
  return d.field().prime_field ? static_cast<long long>(rank_mod_p(pd.gram_u_p, d.field().p))
                               : static_cast<long long>(rank_of(pd.gram_u));
}

}  // namespace

// Solves ch Delta(F) = sum over E within F of [Delta(F):L(E)] ch L(E), where
// the standard module of F has weight spaces U(E,F) for E within F and the
// simple quotient's weights are the Gram ranks.  Entries are keyed (E,F).
DecompMatrix decomposition_matrix(const RingelDatum& d) {
  const auto& flats = d.poset().flats;  // sorted by size: a linear extension
  DecompMatrix out;
  for (Subset f : flats) {
    std::vector<Subset> below;
    for (Subset e : flats)
      if (subset_of(e, f)) below.push_back(e);
    // solve from the top of the interval downward
    for (auto it = below.rbegin(); it != below.rend(); ++it) {
      Subset e = *it;
      long long v = d.dim_u(e, f);
      for (Subset g : below)
        if (subset_of(e, g) && g != e) v -= out.at(g, f) * pair_gram_rank(d, e, g);
      if (v < 0) throw InconsistentSystem("negative multiplicity in decomposition solve");
      if (v != 0) out.entries[{e, f}] = v;
      if (e == f && v != 1) throw InconsistentSystem("diagonal multiplicity is not 1");
    }
    // exact recheck of the expansion, weight by weight
    for (Subset e : below) {
      long long acc = 0;
      for (Subset g : below)
        if (subset_of(e, g)) acc += out.at(g, f) * pair_gram_rank(d, e, g);
      if (acc != d.dim_u(e, f))
        throw InconsistentSystem("character expansion mismatch at " + subset_to_string(f));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// semisimplicity and determinants
// ---------------------------------------------------------------------------

BadPrimes bad_primes(const Matroid& m, const Weights& a) {
  BadPrimes out;
  CyclicFlats cf = m.cyclic_flats();
  for (Subset k : cf.flats)
    for (Subset f : cf.flats) {
      if (k == f || !subset_of(k, f)) continue;
      if (!m.minor(k, f).matroid.connected()) continue;
      Int s = a.sum(f & ~k);
      if (s == 0) {
        out.zero_sums.emplace_back(k, f);
        continue;
      }
      for (std::int64_t p : prime_divisors(s)) out.primes.insert(p);
    }
  return out;
}

bool semisimple_test(const Matroid& m, const Weights& a, std::int64_t p) {
  for (int i = 0; i < a.size(); ++i)
    if (a(i) % p == 0) return false;
  BadPrimes bp = bad_primes(m, a);
  if (!bp.zero_sums.empty()) return false;
  return bp.primes.count(p) == 0;
}

Rat gram_det_u_pair(const Matroid& m, const Weights& a, Subset e, Subset f) {
  PairData pd = build_pair_data(m, a, e, f);
  return determinant(pd.gram_u);
}

Rat gram_det_u(const Matroid& m, const Weights& a) {
  return gram_det_u_pair(m, a, 0, m.ground());
}

DetFactorization bv_predicted_pair(const Matroid& m, const Weights& a, Subset e, Subset f) {
  DetFactorization out;
  out.product = Rat(1);
  MatroidMinor mm = m.minor(e, f);
  CyclicFlats cf = mm.matroid.cyclic_flats();
  Subset minor_ground = mm.matroid.ground();
  for (Subset km : cf.flats) {
    if (km == minor_ground) continue;
    long long beta = mm.matroid.minor(km, minor_ground).matroid.beta();
    long long mu = mm.matroid.minor(0, km).matroid.mu_plus_dual();
    long long exp = beta * mu;
    if (exp == 0) continue;
    Subset ambient_flat = e;
    for (int x : elements(km)) ambient_flat |= (1u << mm.embedding[x]);
    Int base = a.sum(f & ~ambient_flat);
    out.factors.push_back({ambient_flat, base, exp});
    Rat b(base);
    for (long long i = 0; i < exp; ++i) out.product *= b;
  }
  return out;
}

DetFactorization bv_predicted(const Matroid& m, const Weights& a) {
  return bv_predicted_pair(m, a, 0, m.ground());
}

JantzenSum jantzen_rhs(const RingelDatum& d, std::int64_t p, Subset e) {
  d.require_flat(e);
  if (!is_prime(p)) throw WeightError("jantzen: modulus must be prime");
  d.weights().require_units_mod(p);
  JantzenSum out;
  for (Subset k : d.poset().flats) {
    if (k == e || !subset_of(e, k)) continue;
    long long beta = d.matroid().minor(e, k).matroid.beta();
    if (beta == 0) continue;
    Int s = d.weights().sum(k & ~e);
    if (s == 0) throw WeightError("jantzen: weight sum vanishes on " + subset_to_string(k & ~e));
    long long c = beta * valuation(s, p);
    if (c == 0) continue;
    out.coefficients[k] = c;
    out.resolved += c * standard_character(d, k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// dimension identities
// ---------------------------------------------------------------------------

IdentityReport krs_checks(const Matroid& m) {
  IdentityReport rep;
  rep.bases_count = static_cast<long long>(m.bases().size());

  rep.flat_sum = 0;
  for (Subset v : m.flats())
    rep.flat_sum +=
        m.minor(0, v).matroid.mu_plus_dual() * m.minor(v, m.ground()).matroid.mu_plus();
  rep.dimension_identity = (rep.flat_sum == rep.bases_count);

  Weights ones = Weights::ones(m.size());
  rep.springer_sum = 0;
  for (Subset e : m.cyclic_flats().flats) {
    PairData lower = build_pair_data(m, ones, 0, e);
    PairData upper = build_pair_data(m, ones, e, m.ground());
    rep.springer_sum += static_cast<long long>(lower.qdim_u() * upper.qdim_ucheck());
  }
  rep.springer_refinement = (rep.springer_sum == rep.bases_count);

  TuttePoly conv;
  for_each_submask(m.ground(), [&](Subset s) {
    TuttePoly left = m.minor(0, s).matroid.tutte().at_x0();
    TuttePoly right = m.minor(s, m.ground()).matroid.tutte().at_y0();
    conv += left * right;
  });
  rep.tutte_convolution = (conv == m.tutte());
  return rep;
}

AlgebraDims algebra_dims(const RingelDatum& d) {
  AlgebraDims out;
  const auto& flats = d.poset().flats;
  for (Subset x : flats)
    for (Subset y : flats) {
      long long r = 0, rc = 0;
      for (Subset z : flats) {
        if (subset_of(x, z) && subset_of(y, z)) r += d.dim_u(x, z) * d.dim_u(y, z);
        if (subset_of(z, x) && subset_of(z, y)) rc += d.dim_ucheck(z, x) * d.dim_ucheck(z, y);
      }
      if (r != 0) out.r_blocks[{x, y}] = r;
      if (rc != 0) out.rcheck_blocks[{x, y}] = rc;
      out.dim_r += r;
      out.dim_rcheck += rc;
    }
  return out;
}

// ---------------------------------------------------------------------------
// operator model
// ---------------------------------------------------------------------------

namespace {

struct GlobalBasis {
  std::vector<std::pair<Subset, Subset>> order;
  std::map<std::pair<Subset, Subset>, Index> offset;
  std::map<std::pair<Subset, Subset>, std::map<Subset, Index>> index_in_piece;
  Index total = 0;
};

GlobalBasis make_global_basis(const RingelDatum& d) {
  GlobalBasis g;
  for (const auto& [key, pd] : d.pairs()) {
    g.order.push_back(key);
    g.offset[key] = g.total;
    auto& idx = g.index_in_piece[key];
    for (std::size_t i = 0; i < pd.monomials.size(); ++i)
      idx[pd.monomials[i]] = static_cast<Index>(i);
    g.total += pd.dim();
  }
  return g;
}

// scatter an exterior vector into the global coordinates of one target piece
void scatter(const GlobalBasis& g, const std::pair<Subset, Subset>& piece, const ExtVector& v,
             Index col, MatQ& op) {
  if (v.is_zero()) return;
  auto it = g.index_in_piece.find(piece);
  if (it == g.index_in_piece.end())
    throw InconsistentSystem("operator image misses piece " + subset_to_string(piece.first) +
                             "->" + subset_to_string(piece.second));
  Index base = g.offset.at(piece);
  for (const auto& [s, c] : v.terms()) {
    auto jt = it->second.find(s);
    if (jt == it->second.end())
      throw InconsistentSystem("operator image escapes piece monomials");
    op(base + jt->second, col) += c;
  }
}

}  // namespace

OperatorModel operator_model(const RingelDatum& d, Index cap) {
  GlobalBasis g = make_global_basis(d);
  if (g.total > cap)
    throw DimensionTooLarge("DimensionTooLarge: dim B = " + std::to_string(g.total) +
                            " exceeds cap " + std::to_string(cap));
  OperatorModel out;
  out.dim_b = g.total;
  out.piece_order = g.order;
  for (const auto& key : g.order) out.piece_offset.push_back(g.offset.at(key));
  const Weights& a = d.weights();

  for (const auto& [key, pd] : d.pairs()) {
    auto [x, y] = key;
    for (Index col = 0; col < pd.u_basis.cols(); ++col) {
      ExtVector u = column_vector(pd.u_basis, col, pd.monomials);
      MatQ mult = MatQ::Zero(g.total, g.total);
      MatQ contr = MatQ::Zero(g.total, g.total);
      for (const auto& [skey, spd] : d.pairs()) {
        auto [e, f] = skey;
        Index base = g.offset.at(skey);
        for (Index j = 0; j < spd.dim(); ++j) {
          ExtVector b = ExtVector::monomial(spd.monomials[j]);
          if (e == y)  // u * b : piece(Y,F) -> piece(X,F)
            scatter(g, {x, f}, wedge(u, b), base + j, mult);
          if (e == x)  // u -| b : piece(X,F) -> piece(Y,F), vanishes unless Y in F
            scatter(g, {y, f}, contract_left(u, b, a), base + j, contr);
        }
      }
      out.r_generators.push_back(std::move(mult));
      out.r_generators.push_back(std::move(contr));
    }
    for (Index col = 0; col < pd.ucheck_basis.cols(); ++col) {
      ExtVector uc = column_vector(pd.ucheck_basis, col, pd.monomials);
      MatQ mult = MatQ::Zero(g.total, g.total);
      MatQ contr = MatQ::Zero(g.total, g.total);
      for (const auto& [skey, spd] : d.pairs()) {
        auto [e, f] = skey;
        Index base = g.offset.at(skey);
        for (Index j = 0; j < spd.dim(); ++j) {
          ExtVector b = ExtVector::monomial(spd.monomials[j]);
          if (f == x)  // b * uc : piece(E,X) -> piece(E,Y)
            scatter(g, {e, y}, wedge(b, uc), base + j, mult);
          if (f == y)  // b |- uc : piece(E,Y) -> piece(E,X), vanishes unless X in E... dual rule
            scatter(g, {e, x}, contract_right(b, uc, a), base + j, contr);
        }
      }
      out.rcheck_generators.push_back(std::move(mult));
      out.rcheck_generators.push_back(std::move(contr));
    }
  }
  return out;
}

// The filtration multiplicity of the dual-side standard at G inside the
// piece sum over E is dim U(E,G); the dual standard's weights are the
// Ucheck dimensions.  (Pairing the factors the other way around fails on
// the graphic matroid of K4.)
TiltingCheck tilting_character_check(const RingelDatum& d, Subset e) {
  d.require_flat(e);
  TiltingCheck out;
  for (Subset f : d.poset().flats)
    if (subset_of(e, f)) out.lhs.add(f, static_cast<long long>(d.pair_data(e, f).dim()));
  for (Subset gflat : d.poset().flats) {
    if (!subset_of(e, gflat)) continue;
    Character dual_standard;
    for (Subset f : d.poset().flats)
      if (subset_of(gflat, f)) dual_standard.add(f, d.dim_ucheck(gflat, f));
    out.rhs += d.dim_u(e, gflat) * dual_standard;
  }
  out.pass = (out.lhs == out.rhs);
  return out;
}

}  // namespace matschur
