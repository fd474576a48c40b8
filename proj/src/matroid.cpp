#include "matschur/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace matschur {

Int TuttePoly::operator()(const Int& x, const Int& y) const {
  Int total = 0;
  for (const auto& [deg, c] : coeff) {
    Int term = c;
    for (int k = 0; k < deg.first; ++k) term *= x;
    for (int k = 0; k < deg.second; ++k) term *= y;
    total += term;
  }
  return total;
}

Int TuttePoly::coefficient(int i, int j) const {
  auto it = coeff.find({i, j});
  return it == coeff.end() ? Int(0) : it->second;
}

TuttePoly& TuttePoly::operator+=(const TuttePoly& o) {
  for (const auto& [deg, c] : o.coeff) {
    Int& slot = coeff[deg];
    slot += c;
    if (slot == 0) coeff.erase(deg);
  }
  return *this;
}

TuttePoly operator*(const TuttePoly& a, const TuttePoly& b) {
  TuttePoly out;
  for (const auto& [da, ca] : a.coeff)
    for (const auto& [db, cb] : b.coeff) {
      auto key = std::make_pair(da.first + db.first, da.second + db.second);
      Int& slot = out.coeff[key];
      slot += ca * cb;
      if (slot == 0) out.coeff.erase(key);
    }
  return out;
}

TuttePoly TuttePoly::at_x0() const {
  TuttePoly out;
  for (const auto& [deg, c] : coeff)
    if (deg.first == 0) out.coeff[deg] = c;
  return out;
}

TuttePoly TuttePoly::at_y0() const {
  TuttePoly out;
  for (const auto& [deg, c] : coeff)
    if (deg.second == 0) out.coeff[deg] = c;
  return out;
}

std::string TuttePoly::to_string() const {
  if (coeff.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
    const auto& [deg, c] = *it;
    if (!first) out += " + ";
    first = false;
    std::string term;
    if (c != 1 || (deg.first == 0 && deg.second == 0)) term += c.str();
    if (deg.first > 0) term += "x" + (deg.first > 1 ? "^" + std::to_string(deg.first) : "");
    if (deg.second > 0) term += "y" + (deg.second > 1 ? "^" + std::to_string(deg.second) : "");
    out += term;
  }
  return out;
}

int CyclicFlats::index_of(Subset f) const {
  for (std::size_t i = 0; i < flats.size(); ++i)
    if (flats[i] == f) return static_cast<int>(i);
  return -1;
}

struct Matroid::RankCache {
  std::vector<std::atomic<std::int8_t>> table;
  explicit RankCache(std::size_t n) : table(n) {
    for (auto& v : table) v.store(-1, std::memory_order_relaxed);
  }
};

Matroid::Matroid(int n, int rank, std::vector<Subset> bases)
    : n_(n), rank_(rank), bases_(std::move(bases)) {
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  if (n_ <= 20) cache_ = std::make_shared<RankCache>(std::size_t{1} << n_);
}

Matroid Matroid::from_bases(int n, std::vector<Subset> bases) {
  if (n < 0 || n > kMaxGroundSize) throw MatroidError("ground-set size out of range");
  if (bases.empty()) throw MatroidError("EmptyBasisList: no bases given");
  Subset g = full_set(n);
  for (Subset b : bases)
    if (!subset_of(b, g)) throw MatroidError("basis " + subset_to_string(b) + " not within ground set");
  int r = popcount(bases.front());
  for (Subset b : bases)
    if (popcount(b) != r)
      throw MatroidError("EqualCardinalityViolation: bases " + subset_to_string(bases.front()) +
                         " and " + subset_to_string(b) + " differ in size");
  Matroid m(n, r, std::move(bases));
  // exchange axiom, brute force over basis pairs
  for (Subset b1 : m.bases_)
    for (Subset b2 : m.bases_) {
      if (b1 == b2) continue;
      for (int x : elements(b1 & ~b2)) {
        bool found = false;
        for (int y : elements(b2 & ~b1)) {
          Subset cand = (b1 & ~(1u << x)) | (1u << y);
          if (m.is_basis(cand)) {
            found = true;
            break;
          }
        }
        if (!found)
          throw MatroidError("ExchangeViolation: B1=" + subset_to_string(b1) +
                             " B2=" + subset_to_string(b2) + " x=" + std::to_string(x));
      }
    }
  return m;
}

namespace {
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};
}  // namespace

Matroid Matroid::from_graph(int vertices, const std::vector<std::pair<int, int>>& edges) {
  int n = static_cast<int>(edges.size());
  if (n > kMaxGroundSize) throw MatroidError("too many edges");
  for (auto [u, v] : edges)
    if (u < 0 || u >= vertices || v < 0 || v >= vertices)
      throw MatroidError("vertex index out of range");
  auto forest_rank = [&](Subset s) {
    Dsu dsu(vertices);
    int cnt = 0;
    for (int i : elements(s))
      if (dsu.unite(edges[i].first, edges[i].second)) ++cnt;
    return cnt;
  };
  int r = forest_rank(full_set(n));
  std::vector<Subset> bases;
  for_each_subset_of_size(full_set(n), r, [&](Subset s) {
    if (forest_rank(s) == r) bases.push_back(s);
  });
  return Matroid(n, r, std::move(bases));
}

Matroid Matroid::uniform(int r, int n) {
  if (n < 0 || n > kMaxGroundSize) throw MatroidError("ground-set size out of range");
  if (r < 0 || r > n) throw MatroidError("uniform: need 0 <= r <= n");
  std::vector<Subset> bases;
  for_each_subset_of_size(full_set(n), r, [&](Subset s) { bases.push_back(s); });
  return Matroid(n, r, std::move(bases));
}

bool Matroid::is_basis(Subset b) const {
  return std::binary_search(bases_.begin(), bases_.end(), b);
}

int Matroid::rank(Subset s) const {
  if (cache_) {
    std::int8_t v = cache_->table[s].load(std::memory_order_relaxed);
    if (v >= 0) return v;
  }
  int best = 0;
  for (Subset b : bases_) best = std::max(best, popcount(s & b));
  if (cache_) cache_->table[s].store(static_cast<std::int8_t>(best), std::memory_order_relaxed);
  return best;
}

Subset Matroid::closure(Subset s) const {
  int r = rank(s);
  Subset c = s;
  for (int x = 0; x < n_; ++x)
    if (!contains(s, x) && rank(s | (1u << x)) == r) c |= (1u << x);
  return c;
}

Subset Matroid::loops() const {
  Subset l = 0;
  for (int x = 0; x < n_; ++x)
    if (rank(Subset(1u << x)) == 0) l |= (1u << x);
  return l;
}

Subset Matroid::coloops() const {
  Subset c = ground();
  for (Subset b : bases_) c &= b;
  return c;
}

Matroid Matroid::dual() const {
  std::vector<Subset> dbases;
  dbases.reserve(bases_.size());
  for (Subset b : bases_) dbases.push_back(ground() & ~b);
  return Matroid(n_, n_ - rank_, std::move(dbases));
}

MatroidMinor Matroid::minor(Subset contract, Subset restrict_to) const {
  if (!subset_of(contract, restrict_to)) throw MatroidError("minor: need E within F");
  std::vector<int> emb = elements(restrict_to & ~contract);
  int k = static_cast<int>(emb.size());
  std::vector<int> pos(n_, -1);
  for (int i = 0; i < k; ++i) pos[emb[i]] = i;
  int mrank = rank(restrict_to) - rank(contract);
  std::vector<Subset> mbases;
  int rc = rank(contract);
  for_each_subset_of_size(restrict_to & ~contract, mrank, [&](Subset s) {
    if (rank(contract | s) == rc + mrank) {
      Subset relabeled = 0;
      for (int x : elements(s)) relabeled |= (1u << pos[x]);
      mbases.push_back(relabeled);
    }
  });
  if (mbases.empty()) mbases.push_back(0);  // rank-0 minor
  return MatroidMinor{Matroid(k, mrank, std::move(mbases)), std::move(emb)};
}

std::vector<Subset> Matroid::flats() const {
  std::set<Subset> seen;
  std::vector<Subset> frontier{closure(0)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (Subset f : frontier)
      for (int x = 0; x < n_; ++x) {
        if (contains(f, x)) continue;
        Subset g = closure(f | (1u << x));
        if (seen.insert(g).second) next.push_back(g);
      }
    frontier = std::move(next);
  }
  std::vector<Subset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    return std::make_pair(popcount(a), a) < std::make_pair(popcount(b), b);
  });
  return out;
}

CyclicFlats Matroid::cyclic_flats() const {
  CyclicFlats out;
  for (Subset f : flats()) {
    int rf = rank(f);
    bool coloop_free = true;
    for (int x : elements(f))
      if (rank(f & ~(1u << x)) < rf) {
        coloop_free = false;
        break;
      }
    if (coloop_free) out.flats.push_back(f);
  }
  return out;
}

Subset Matroid::fundamental_circuit(Subset basis, int p) const {
  Subset c = 1u << p;
  for (int b : elements(basis))
    if (is_basis((basis & ~(1u << b)) | (1u << p))) c |= (1u << b);
  return c;
}

Subset Matroid::fundamental_bond(Subset basis, int b) const {
  Subset bond = 1u << b;
  for (int p : elements(ground() & ~basis))
    if (is_basis((basis & ~(1u << b)) | (1u << p))) bond |= (1u << p);
  return bond;
}

ActivityRecord Matroid::activities(Subset basis) const {
  if (!is_basis(basis)) throw MatroidError("NotABasis: " + subset_to_string(basis));
  ActivityRecord rec;
  rec.basis = basis;
  for (int p : elements(ground() & ~basis)) {
    Subset ci = fundamental_circuit(basis, p);
    if (std::countr_zero(ci) == p) rec.externally_active |= (1u << p);
  }
  for (int b : elements(basis)) {
    Subset bo = fundamental_bond(basis, b);
    if (std::countr_zero(bo) == b) rec.internally_active |= (1u << b);
  }
  return rec;
}

TuttePoly Matroid::tutte() const {
  TuttePoly t;
  for (Subset b : bases_) {
    ActivityRecord rec = activities(b);
    t.coeff[{popcount(rec.internally_active), popcount(rec.externally_active)}] += 1;
  }
  return t;
}

long long Matroid::beta() const {
  if (n_ == 0) return 0;
  return tutte().coefficient(1, 0).convert_to<long long>();
}

long long Matroid::mu_plus() const {
  Int v = tutte()(1, 0);
  return v.convert_to<long long>();
}

long long Matroid::mu_plus_dual() const {
  Int v = tutte()(0, 1);
  return v.convert_to<long long>();
}

bool Matroid::connected() const {
  if (n_ == 0) throw MatroidError("EmptyGroundSet: connectivity undefined");
  if (n_ == 1) return true;
  // Every circuit is a fundamental circuit of some basis, so the union-find
  // over all ci(B,p) reaches exactly the circuit-connectivity classes.
  Dsu dsu(n_);
  for (Subset b : bases_)
    for (int p : elements(ground() & ~b)) {
      Subset ci = fundamental_circuit(b, p);
      auto el = elements(ci);
      for (std::size_t i = 1; i < el.size(); ++i) dsu.unite(el[0], el[i]);
    }
  int root = dsu.find(0);
  for (int x = 1; x < n_; ++x)
    if (dsu.find(x) != root) return false;
  return true;
}

Matroid k4() {
  return Matroid::from_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

std::vector<std::pair<std::string, Matroid>> library_matroids() {
  std::vector<std::pair<std::string, Matroid>> lib;
  for (int n = 2; n <= 6; ++n) {
    lib.emplace_back("U(1," + std::to_string(n) + ")", Matroid::uniform(1, n));
    lib.emplace_back("U(" + std::to_string(n - 1) + "," + std::to_string(n) + ")",
                     Matroid::uniform(1, n).dual());
  }
  for (int n = 3; n <= 6; ++n) {
    lib.emplace_back("U(2," + std::to_string(n) + ")", Matroid::uniform(2, n));
    if (n > 4)  // U(2,3)*, U(2,4)* already present as U(1,3), U(2,4)
      lib.emplace_back("U(" + std::to_string(n - 2) + "," + std::to_string(n) + ")",
                       Matroid::uniform(2, n).dual());
  }
  lib.emplace_back("K4", k4());
  lib.emplace_back("K4*", k4().dual());
  return lib;
}

}  // namespace matschur
