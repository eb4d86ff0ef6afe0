#include "wdg/lambda_construct.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "wdg/faithful.hpp"

namespace wdg {

namespace {

// ---- type A interval helpers -------------------------------------------

struct AContext {
  int n = 0;
  int r = 0;
  std::vector<int> j;  // j[1..2r], j[0] unused

  int jj(int idx) const { return j[idx]; }
};

AContext a_context(const GradedSystem& gs) {
  const WeightedDiagram& d = gs.diagram();
  if (d.lie_type != LieType::A)
    throw std::invalid_argument("orbit machinery applies to type A only");
  OddSequence seq = odd_sequence(d);
  AContext ctx;
  ctx.n = d.rank;
  ctx.r = static_cast<int>(seq.symmetric.size()) / 2;
  ctx.j.assign(seq.symmetric.size() + 1, 0);
  for (size_t t = 0; t < seq.symmetric.size(); ++t)
    ctx.j[t + 1] = seq.symmetric[t];
  return ctx;
}

std::pair<int, int> to_interval(const Root& root) {
  int a = 0, b = 0;
  for (int p = 0; p < static_cast<int>(root.coords.size()); ++p) {
    if (root.coords[p] == 1) a = p + 1;
    if (root.coords[p] == -1) b = p;  // eps_a - eps_{b+1} = interval (a, b)
  }
  if (a == 0 || b < a) throw std::invalid_argument("not a positive type-A root");
  return {a, b};
}

Root from_interval(int dim, std::pair<int, int> ab) {
  return eps_minus(dim, ab.first, ab.second + 1);
}

// window k with j_{k-1} < a <= j_k <= b < j_{k+1}; -1 when the interval does
// not carry extended weight one
int window_of(const AContext& ctx, int a, int b) {
  for (int k = 2; k <= 2 * ctx.r - 1; ++k)
    if (ctx.jj(k - 1) < a && a <= ctx.jj(k) && ctx.jj(k) <= b && b < ctx.jj(k + 1))
      return k;
  return -1;
}

std::optional<std::pair<int, int>> right_move(const AContext& ctx,
                                              std::pair<int, int> ab) {
  auto [a, b] = ab;
  int k = window_of(ctx, a, b);
  if (k < 0) throw std::invalid_argument("root is not in Phi_{d,1}");
  if (k >= 2 * ctx.r - 1) return std::nullopt;  // no mark to the right
  int t = ctx.jj(k) + ctx.jj(k + 1) - a;        // phi_k(a)
  if (t >= ctx.jj(k + 2)) return std::nullopt;  // image would swallow two marks
  return std::make_pair(b + 1, t);
}

std::optional<std::pair<int, int>> left_move(const AContext& ctx,
                                             std::pair<int, int> ab) {
  auto [a, b] = ab;
  int k = window_of(ctx, a, b);
  if (k < 0) throw std::invalid_argument("root is not in Phi_{d,1}");
  if (k <= 2) return std::nullopt;
  int u = ctx.jj(k) + ctx.jj(k - 1) - b;  // psi_k(b)
  if (u <= ctx.jj(k - 2)) return std::nullopt;
  return std::make_pair(u, a - 1);
}

std::pair<int, int> tau_interval(int n, std::pair<int, int> ab) {
  return {n + 1 - ab.second, n + 1 - ab.first};
}

}  // namespace

Root right_transform(const GradedSystem& gs, const Root& r) {
  AContext ctx = a_context(gs);
  auto img = right_move(ctx, to_interval(r));
  if (!img) throw std::invalid_argument("root has no right transformation");
  return from_interval(gs.system().dim(), *img);
}

Root left_transform(const GradedSystem& gs, const Root& r) {
  AContext ctx = a_context(gs);
  auto img = left_move(ctx, to_interval(r));
  if (!img) throw std::invalid_argument("root has no left transformation");
  return from_interval(gs.system().dim(), *img);
}

std::vector<OrbitClass> classify_orbits(const GradedSystem& gs) {
  AContext ctx = a_context(gs);
  const int dim = gs.system().dim();

  std::vector<std::pair<int, int>> phi1;
  for (const Root& r : gs.phi1()) phi1.push_back(to_interval(r));

  std::vector<OrbitClass> classes;
  std::set<std::pair<int, int>> covered;
  for (const auto& seed : phi1) {
    if (left_move(ctx, seed)) continue;  // not a chain start
    if (covered.count(seed)) continue;   // mirror partner of an emitted class

    std::vector<std::pair<int, int>> chain{seed};
    while (auto next = right_move(ctx, chain.back())) chain.push_back(*next);

    OrbitClass cls;
    cls.seed = seed;
    for (const auto& ab : chain) cls.r_orbit.push_back(from_interval(dim, ab));

    // mirror chain from tau(seed), running leftwards
    std::vector<std::pair<int, int>> mirror{tau_interval(ctx.n, seed)};
    while (auto next = left_move(ctx, mirror.back())) mirror.push_back(*next);
    if (mirror.size() != chain.size())
      throw std::logic_error("mirror chain length mismatch");
    for (const auto& ab : mirror) cls.l_orbit.push_back(from_interval(dim, ab));

    std::set<std::pair<int, int>> cset(chain.begin(), chain.end());
    std::set<std::pair<int, int>> mset(mirror.begin(), mirror.end());
    if (cset == mset) {
      cls.kind = OrbitClass::Kind::Omega0;
      if (chain.size() % 2 != 0)
        throw std::logic_error("self-mirror chain of odd length");
    } else {
      for (const auto& ab : mirror)
        if (cset.count(ab)) throw std::logic_error("chains neither equal nor disjoint");
      cls.kind = chain.size() % 2 ? OrbitClass::Kind::Omega1 : OrbitClass::Kind::Omega2;
      covered.insert(tau_interval(ctx.n, chain.back()));  // seed of the mirror chain
    }

    if (cls.kind == OrbitClass::Kind::Omega1) {
      // unique even s with r_end + L^s(tau(seed)) a weight-2 root
      int found = -1;
      for (size_t s = 0; s < mirror.size(); ++s) {
        Root sum = cls.r_orbit.back() + cls.l_orbit[s];
        if (gs.system().positive_index(sum) >= 0) {
          if (found >= 0) throw std::logic_error("link root is not unique");
          found = static_cast<int>(s);
          cls.link_root = sum;
        }
      }
      if (found < 0) throw std::logic_error("no link root for an odd mirror pair");
      if (found % 2 != 0) throw std::logic_error("link index is odd");
      if (gs.phi2_index(*cls.link_root) < 0)
        throw std::logic_error("link root is not of weight 2");
    }
    classes.push_back(std::move(cls));
  }

  // the classes partition Phi_{d,1}
  size_t total = 0;
  std::set<Root> seen;
  for (const auto& cls : classes) {
    std::set<Root> members(cls.r_orbit.begin(), cls.r_orbit.end());
    members.insert(cls.l_orbit.begin(), cls.l_orbit.end());
    total += members.size();
    seen.insert(members.begin(), members.end());
  }
  if (total != gs.phi1().size() || seen.size() != gs.phi1().size())
    throw std::logic_error("orbit classes do not partition Phi_{d,1}");
  return classes;
}

namespace {

LambdaAssignment lambda_from_support(const GradedSystem& gs, const std::set<Root>& support) {
  LambdaAssignment lam;
  lam.ring = CoefficientRing::integers();
  for (const Root& r : support) {
    if (gs.phi2_index(r) < 0)
      throw std::logic_error("constructed support root is outside Phi_{d,2}");
    lam.values[r] = 1;
  }
  return lam;
}

ConstructedLambda empty_lambda(const char* method) {
  ConstructedLambda out;
  out.lambda.ring = CoefficientRing::integers();
  out.method = method;
  return out;
}

// ---- shared B/C/D helpers ------------------------------------------------

struct BCDSeq {
  OddSequence seq;
  int n = 0;

  int k() const { return seq.k(); }
  int mark(int l) const { return l == 0 ? 0 : seq.marks[l - 1]; }
  int gap(int l) const { return seq.gap(l); }
};

BCDSeq bcd_seq(const GradedSystem& gs) {
  return {odd_sequence(gs.diagram()), gs.diagram().rank};
}

// X_l difference roots: eps_s - eps_t with t - s = i_{l+1} - i_{l-1},
// s in (i_{l-1}, i_l]
void add_xl(const GradedSystem& gs, const BCDSeq& v, int l, std::set<Root>& support) {
  const int dim = gs.system().dim();
  const int width = v.mark(l + 1) - v.mark(l - 1);
  for (int s = v.mark(l - 1) + 1; s <= v.mark(l); ++s)
    support.insert(eps_minus(dim, s, s + width));
}

// X_{k-1} consecutive pair sums inside the top gap
void add_pair_sums(const GradedSystem& gs, int lo, int hi, std::set<Root>& support) {
  const int dim = gs.system().dim();
  for (int j = lo; j <= hi; j += 2) support.insert(eps_plus(dim, j, j + 1));
}

// Omega rows for the alternating tails: maximal runs of equal gap values over
// positions of the given parity in [1, k-2], closed when the next same-parity
// gap is strictly larger.
std::vector<int> omega_rows(const BCDSeq& v, int parity, bool b_initial_piece) {
  std::vector<int> rows;
  const int k = v.k();
  const int base = v.mark(k - 2);
  if (b_initial_piece)
    for (int o = 2; o <= v.gap(1); ++o) rows.push_back(base + o);
  int p = parity == 0 ? 2 : 1;
  while (p <= k - 2) {
    int u = p, last = p;
    while (last + 2 <= k - 2 && v.gap(last + 2) == v.gap(u)) last += 2;
    const bool closed = last + 2 <= k && v.gap(last + 2) > v.gap(u);
    if (closed)
      for (int o = v.gap(u - 1) + 1; o <= v.gap(last + 1); ++o) rows.push_back(base + o);
    p = last + 2;
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

void add_tails(const GradedSystem& gs, const BCDSeq& v, const std::vector<int>& rows,
               std::set<Root>& support) {
  const int dim = gs.system().dim();
  const int ik = v.mark(v.k());
  for (size_t s = 1; s <= rows.size(); ++s) {
    const int target = ik + static_cast<int>((s + 1) / 2);
    const int sign = (s % 2 == 1) ? -1 : 1;
    Root root = sign > 0 ? eps_plus(dim, rows[s - 1], target)
                         : eps_minus(dim, rows[s - 1], target);
    support.insert(root);
  }
}

ConstructedLambda finish(const GradedSystem& gs, std::set<Root> support,
                         std::string method) {
  ConstructedLambda out;
  out.lambda = lambda_from_support(gs, support);
  out.method = std::move(method);
  if (!is_unimodular(gs, out.lambda)) {
    auto found = search_unimodular_01(gs, 24);
    if (!found)
      throw std::logic_error("construction failed and no unimodular lambda exists");
    out.lambda = *found;
    out.method += "+search-fallback";
    out.used_fallback = true;
  }
  return out;
}

void require_special(const GradedSystem& gs) {
  if (!is_special(divisors_from_diagram(gs.diagram())))
    throw std::invalid_argument("diagram is not special");
}

}  // namespace

ConstructedLambda construct_type_A(const GradedSystem& gs) {
  if (gs.diagram().lie_type != LieType::A)
    throw std::invalid_argument("construct_type_A needs a type A diagram");
  if (gs.phi1().empty()) return empty_lambda("a-empty");
  if (!is_odd(gs.diagram()))
    throw std::invalid_argument("construct_type_A needs an odd diagram");

  std::set<Root> support;
  for (const OrbitClass& cls : classify_orbits(gs)) {
    for (size_t t = 0; t + 1 < cls.r_orbit.size(); ++t)
      support.insert(cls.r_orbit[t] + cls.r_orbit[t + 1]);
    if (cls.kind != OrbitClass::Kind::Omega0)
      for (size_t t = 0; t + 1 < cls.l_orbit.size(); ++t)
        support.insert(cls.l_orbit[t] + cls.l_orbit[t + 1]);
    if (cls.link_root) support.insert(*cls.link_root);
  }
  ConstructedLambda out;
  out.lambda = lambda_from_support(gs, support);
  out.method = "a-orbit-sums";
  if (!is_unimodular(gs, out.lambda))
    throw std::logic_error("type A orbit construction is not unimodular");
  return out;
}

ConstructedLambda construct_type_C(const GradedSystem& gs) {
  if (gs.diagram().lie_type != LieType::C)
    throw std::invalid_argument("construct_type_C needs a type C diagram");
  require_special(gs);
  if (gs.phi1().empty()) return empty_lambda("c-empty");
  if (!is_odd(gs.diagram()))
    throw std::invalid_argument("construct_type_C needs an odd diagram");
  BCDSeq v = bcd_seq(gs);
  const int k = v.k(), dim = gs.system().dim();
  std::set<Root> support;
  if (k == 1) {
    const int r = v.mark(1);
    for (int i = 1; i + 1 <= r; i += 2) support.insert(eps_plus(dim, i, i + 1));
    return finish(gs, std::move(support), "c-rank-one-pairs");
  }
  for (int l = 1; l <= k - 2; ++l) add_xl(gs, v, l, support);
  add_pair_sums(gs, v.mark(k - 1) + 1, v.mark(k) - 1, support);
  std::vector<int> rows;  // the whole previous gap, in order
  for (int s = v.mark(k - 2) + 1; s <= v.mark(k - 1); ++s) rows.push_back(s);
  add_tails(gs, v, rows, support);
  return finish(gs, std::move(support), "c-xsets");
}

ConstructedLambda construct_type_B(const GradedSystem& gs) {
  if (gs.diagram().lie_type != LieType::B)
    throw std::invalid_argument("construct_type_B needs a type B diagram");
  require_special(gs);
  if (gs.phi1().empty()) return empty_lambda("b-empty");
  if (!is_odd(gs.diagram()))
    throw std::invalid_argument("construct_type_B needs an odd diagram");
  BCDSeq v = bcd_seq(gs);
  const int k = v.k(), dim = gs.system().dim();
  if (k % 2 != 0) throw std::logic_error("special odd type B diagram with odd k");
  std::set<Root> support;
  for (int l = 1; l <= k - 2; ++l) add_xl(gs, v, l, support);
  add_pair_sums(gs, v.mark(k - 1) + 1, v.mark(k) - 1, support);
  add_tails(gs, v, omega_rows(v, k % 2, /*b_initial_piece=*/true), support);
  support.insert(eps_single(dim, v.mark(k - 2) + 1, 1));  // the short root
  return finish(gs, std::move(support), "b-xsets");
}

ConstructedLambda construct_type_D(const GradedSystem& gs) {
  if (gs.diagram().lie_type != LieType::D)
    throw std::invalid_argument("construct_type_D needs a type D diagram");
  require_special(gs);
  if (gs.phi1().empty()) return empty_lambda("d-empty");
  if (!is_odd(gs.diagram()))
    throw std::invalid_argument("construct_type_D needs an odd diagram");
  BCDSeq v = bcd_seq(gs);
  const int k = v.k(), dim = gs.system().dim(), n = v.n;

  if (v.seq.d_case == OddSequence::DCase::case2) {
    std::set<Root> support;
    if (k == 1) {
      const int r = v.mark(1);
      for (int i = 1; i + 1 <= r; i += 2) support.insert(eps_plus(dim, i, i + 1));
      return finish(gs, std::move(support), "d-rank-one-pairs");
    }
    for (int l = 1; l <= k - 2; ++l) add_xl(gs, v, l, support);
    add_pair_sums(gs, v.mark(k - 1) + 1, v.mark(k) - 1, support);
    add_tails(gs, v, omega_rows(v, k % 2, /*b_initial_piece=*/false), support);
    return finish(gs, std::move(support), "d-xsets");
  }

  // fork case
  if (v.seq.excluded_family) {
    // partition 2^{2m}1^2: no displayed formula; certified by exhaustive search
    static std::mutex mtx;
    static std::map<std::string, LambdaAssignment> cache;
    const std::string key = gs.diagram().source.id();
    {
      std::lock_guard<std::mutex> lock(mtx);
      auto it = cache.find(key);
      if (it != cache.end()) return {it->second, "d-fork-search", false};
    }
    auto found = search_unimodular_01(gs, 24);
    if (!found) throw std::logic_error("no unimodular lambda for the excluded family");
    {
      std::lock_guard<std::mutex> lock(mtx);
      cache[key] = *found;
    }
    return {*found, "d-fork-search", false};
  }

  std::set<Root> support;
  for (int l = 1; l <= k - 1; ++l) add_xl(gs, v, l, support);
  const int sk = v.gap(k);
  if (sk == 1) {
    for (int j = v.mark(k) + 1; j + 1 <= n - 1; ++j)
      if ((j - (v.mark(k) + 1)) % 2 == 0) support.insert(eps_plus(dim, j, j + 1));
    return finish(gs, std::move(support), "d-fork-pairs");
  }
  // s_k = 2
  const int a = v.mark(k) - 1, b = v.mark(k);
  support.insert(eps_minus(dim, a, n));
  support.insert(eps_plus(dim, b, n));
  PQPartition pq = pq_partition(gs);
  int min_col = n;  // columns of Q_k roots eps_{a|b} - eps_j
  for (const Root& root : pq.q_sets.back()) {
    int s = 0, t = 0;
    for (int p = 0; p < dim; ++p) {
      if (root.coords[p] == 1) s = p + 1;
      if (root.coords[p] == -1) t = p + 1;
    }
    (void)s;
    if (t > 0) min_col = std::min(min_col, t);
  }
  const int sv = (pq.q_sets.back().empty() ? n - 1 : min_col - 1) - v.mark(k);
  for (int j = v.mark(k) + 1; j <= v.mark(k) + sv && j + 1 <= n - 1; ++j)
    support.insert(eps_plus(dim, j, j + 1));
  return finish(gs, std::move(support), "d-fork-tails");
}

ConstructedLambda construct_lambda(const GradedSystem& gs) {
  switch (gs.diagram().lie_type) {
    case LieType::A: return construct_type_A(gs);
    case LieType::B: return construct_type_B(gs);
    case LieType::C: return construct_type_C(gs);
    case LieType::D: return construct_type_D(gs);
  }
  throw std::logic_error("unreachable");
}

std::optional<LambdaAssignment> search_unimodular_01(const GradedSystem& gs,
                                                     int cap_vars) {
  GramStructure st = gram_structure(gs);
  std::vector<int> used;
  for (size_t i = 0; i < st.var_used.size(); ++i)
    if (st.var_used[i]) used.push_back(static_cast<int>(i));
  const int u = static_cast<int>(used.size());
  if (u > cap_vars) throw std::invalid_argument("search space exceeds the cap");
  const int n = st.order;
  if (n == 0) {
    LambdaAssignment lam;
    lam.ring = CoefficientRing::integers();
    return lam;
  }

  const unsigned long long p = (1ull << 61) - 1;  // Mersenne prime
  auto mulmod = [&](unsigned long long x, unsigned long long y) {
    return static_cast<unsigned long long>(
        static_cast<unsigned __int128>(x) * y % p);
  };
  auto powmod = [&](unsigned long long x, unsigned long long e) {
    unsigned long long r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, x);
      x = mulmod(x, x);
      e >>= 1;
    }
    return r;
  };

  std::vector<int> var_slot(st.var_used.size(), -1);
  for (int i = 0; i < u; ++i) var_slot[used[i]] = i;

  for (unsigned long long mask = 0; mask < (1ull << u); ++mask) {
    // GF(2) filter
    Gf2Matrix g2(n, n);
    for (const auto& e : st.entries) {
      long long val = (e.coeff & 1) & ((mask >> var_slot[e.var]) & 1);
      if (val) {
        g2.flip(e.i, e.j);
        g2.flip(e.j, e.i);
      }
    }
    if (!gf2_det(g2)) continue;
    // single-prime filter: determinant must be +-1 mod p
    std::vector<unsigned long long> a(static_cast<size_t>(n) * n, 0);
    for (const auto& e : st.entries) {
      long long val = e.coeff * static_cast<long long>((mask >> var_slot[e.var]) & 1);
      unsigned long long residue = val >= 0 ? val : p + val;
      a[static_cast<size_t>(e.i) * n + e.j] = residue % p;
      a[static_cast<size_t>(e.j) * n + e.i] = (p - residue % p) % p;
    }
    unsigned long long det = 1;
    bool singular = false;
    for (int c = 0; c < n && !singular; ++c) {
      int pivot = -1;
      for (int r2 = c; r2 < n; ++r2)
        if (a[static_cast<size_t>(r2) * n + c]) { pivot = r2; break; }
      if (pivot < 0) { singular = true; break; }
      if (pivot != c) {
        for (int j2 = 0; j2 < n; ++j2)
          std::swap(a[static_cast<size_t>(pivot) * n + j2],
                    a[static_cast<size_t>(c) * n + j2]);
        det = p - det;
      }
      unsigned long long pv = a[static_cast<size_t>(c) * n + c];
      det = mulmod(det, pv);
      unsigned long long pinv = powmod(pv, p - 2);
      for (int r2 = c + 1; r2 < n; ++r2) {
        unsigned long long f = mulmod(a[static_cast<size_t>(r2) * n + c], pinv);
        if (!f) continue;
        for (int j2 = c; j2 < n; ++j2)
          a[static_cast<size_t>(r2) * n + j2] =
              (a[static_cast<size_t>(r2) * n + j2] + p -
               mulmod(f, a[static_cast<size_t>(c) * n + j2])) % p;
      }
    }
    if (singular || (det != 1 && det != p - 1)) continue;
    // exact confirmation
    LambdaAssignment lam;
    lam.ring = CoefficientRing::integers();
    for (int i = 0; i < u; ++i)
      if ((mask >> i) & 1) lam.values[gs.phi2()[used[i]]] = 1;
    if (is_unimodular(gs, lam)) return lam;
  }
  return std::nullopt;
}

}  // namespace wdg
