#include "wdg/faithful.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wdg {

namespace {

struct SeqView {
  OddSequence seq;
  int n = 0;
  LieType type;

  int k() const { return seq.k(); }
  int mark(int l) const {  // i_l with i_0 = 0
    if (l == 0) return 0;
    return seq.marks[l - 1];
  }
  bool fork_case() const { return seq.d_case == OddSequence::DCase::case1; }
};

SeqView seq_view(const GradedSystem& gs) {
  const WeightedDiagram& d = gs.diagram();
  if (d.lie_type == LieType::A)
    throw std::invalid_argument("faithful-map machinery applies to types B/C/D only");
  if (!is_odd(d)) throw std::invalid_argument("faithful-map machinery needs an odd diagram");
  return SeqView{odd_sequence(d), d.rank, d.lie_type};
}

bool is_difference_root(const Root& r, int* s, int* t) {
  int pos = 0, neg = 0;
  for (int p = 0; p < static_cast<int>(r.coords.size()); ++p) {
    if (r.coords[p] == 1 && pos == 0) pos = p + 1;
    else if (r.coords[p] == -1 && neg == 0) neg = p + 1;
    else if (r.coords[p] != 0) return false;
  }
  if (pos == 0 || neg == 0 || pos > neg) return false;
  *s = pos;
  *t = neg;
  return true;
}

// multiplicity of alpha_i in a positive root, via the cached expansion table
int mult_of(const GradedSystem& gs, const Root& r, int i) {
  return multiplicity(gs.system(), r, i);
}

}  // namespace

int faithful_window_count(const GradedSystem& gs) {
  SeqView v = seq_view(gs);
  const int L = v.fork_case() ? v.k() - 1 : v.k() - 2;
  return std::max(0, L);
}

std::vector<Root> y_set(const GradedSystem& gs, int l) {
  SeqView v = seq_view(gs);
  std::vector<Root> out;
  if (v.fork_case() && l == v.k() + 1) {
    // fork block: weight-1 roots not containing any ordinary mark
    for (const Root& r : gs.phi1()) {
      bool plain = true;
      for (int j = 1; j <= v.k(); ++j) plain = plain && mult_of(gs, r, v.mark(j)) == 0;
      if (plain) out.push_back(r);
    }
    return out;
  }
  if (l < 1 || l > v.k()) throw std::invalid_argument("y_set index out of range");
  for (const Root& r : gs.phi1())
    if (mult_of(gs, r, v.mark(l)) == 1) out.push_back(r);
  return out;
}

std::vector<Root> omega_window(const GradedSystem& gs, int l) {
  SeqView v = seq_view(gs);
  if (l < 1 || l > faithful_window_count(gs))
    throw std::invalid_argument("omega window index out of range");
  // width bound in epsilon-coordinates; the widest admissible root of the
  // window is exactly the X_l construction width i_{l+1} - i_{l-1}
  const int bound = v.mark(l + 1) - v.mark(l - 1);
  std::vector<Root> out;
  for (const Root& r : gs.phi2()) {
    int s = 0, t = 0;
    if (is_difference_root(r, &s, &t) && t - s <= bound) out.push_back(r);
  }
  return out;
}

bool is_faithful(const GradedSystem& gs, const LambdaAssignment& lam) {
  SeqView v = seq_view(gs);
  const int L = v.fork_case() ? v.k() - 1 : v.k() - 2;
  if (L < 1)
    throw std::invalid_argument("faithfulness needs at least one window (k too small)");
  for (int l = 1; l <= L; ++l) {
    std::set<Root> omega;
    for (const Root& r : omega_window(gs, l)) omega.insert(r);
    for (const Root& g : gs.phi2()) {
      if (lam.value_of(g) == 0) continue;
      if (mult_of(gs, g, v.mark(l)) == 1 && mult_of(gs, g, v.mark(l + 1)) == 1 &&
          !omega.count(g))
        return false;
    }
  }
  return true;
}

namespace {

// lambda'(e_beta) = lambda(exp(c ad e_delta) e_beta) for a weight-0 root delta.
// The divided coefficient N1*N2/2 of the second-order term is integral for any
// Chevalley basis; we assert that.
LambdaAssignment pullback_exp_ad(const GradedSystem& gs, const LambdaAssignment& lam,
                                 const Root& delta, long long c) {
  if (gs.weight_of(delta) != 0)
    throw std::invalid_argument("transvection root must have extended weight 0");
  const ChevalleyBasis& ch = gs.basis();
  const bool field = lam.ring.kind != CoefficientRing::Kind::Integers;
  Gf2Field f(lam.ring.kind == CoefficientRing::Kind::GF2k ? lam.ring.k : 1);
  LambdaAssignment out;
  out.ring = lam.ring;
  for (const Root& beta : gs.phi2()) {
    long long acc = lam.value_of(beta);
    Root cur = beta;
    long long nprod = 1;
    for (int step = 1; step <= 2; ++step) {
      Root next = cur + delta;
      if (!gs.system().is_root(next)) break;
      nprod *= ch.bracket(delta, cur).coefficient;
      long long divided = nprod;
      if (step == 2) {
        if (divided % 2 != 0) throw std::logic_error("non-integral divided power");
        divided /= 2;
      }
      if (field) {
        uint64_t term = f.mul(f.pow(static_cast<uint64_t>(c) & f.mask(), step),
                              static_cast<uint64_t>(divided & 1 ? 1 : 0));
        term = f.mul(term, static_cast<uint64_t>(lam.value_of(next)) & f.mask());
        acc = static_cast<long long>(static_cast<uint64_t>(acc) ^ term);
      } else {
        long long cpow = 1;
        for (int p = 0; p < step; ++p) cpow *= c;
        acc += cpow * divided * lam.value_of(next);
      }
      cur = next;
    }
    if (acc != 0) out.values[beta] = acc;
  }
  return out;
}

void check_block(const GradedSystem& gs, int l, int s, int t) {
  SeqView v = seq_view(gs);
  if (l < 1 || l > v.k()) throw std::invalid_argument("block index out of range");
  int top = l < v.k() ? v.mark(l + 1) : (v.type == LieType::D ? v.n - 1 : v.n);
  if (v.fork_case() && l < v.k()) top = v.mark(l + 1);
  if (s == t || s < v.mark(l) || t < v.mark(l) || s > top || t > top)
    throw std::invalid_argument("transvection indices outside the block");
}

}  // namespace

LambdaAssignment apply_rho(const GradedSystem& gs, const LambdaAssignment& lam,
                           int l, int s, int t, long long gamma) {
  check_block(gs, l, s, t);
  Root delta = eps_minus(gs.system().dim(), s, t);
  if (gamma == 0) return lam;
  return pullback_exp_ad(gs, lam, delta, gamma);
}

LambdaAssignment apply_swap(const GradedSystem& gs, const LambdaAssignment& lam,
                            int l, int s, int t) {
  check_block(gs, l, s, t);
  const int dim = gs.system().dim();
  Root delta = eps_minus(dim, s, t);
  // Weyl element: exp(ad e_delta) exp(-ad e_{-delta}) exp(ad e_delta)
  LambdaAssignment out = pullback_exp_ad(gs, lam, delta, 1);
  out = pullback_exp_ad(gs, out, -delta, -1);
  return pullback_exp_ad(gs, out, delta, 1);
}

LambdaAssignment faithfulize(const GradedSystem& gs, const LambdaAssignment& lam) {
  SeqView v = seq_view(gs);
  const int L = v.fork_case() ? v.k() - 1 : v.k() - 2;
  if (L < 1)
    throw std::invalid_argument("faithfulize needs at least one window (k too small)");
  const bool field = lam.ring.kind != CoefficientRing::Kind::Integers;
  Gf2Field f(lam.ring.kind == CoefficientRing::Kind::GF2k ? lam.ring.k : 1);

  LambdaAssignment cur = lam;
  const int dim = gs.system().dim();
  for (int guard = 0;; ++guard) {
    if (guard > 1000 + 64 * static_cast<int>(gs.phi2().size()))
      throw std::logic_error("faithfulize failed to terminate");
    // smallest offending (s, t) and its window
    int best_s = -1, best_t = -1, best_l = -1;
    for (int l = 1; l <= L; ++l) {
      std::set<Root> omega;
      for (const Root& r : omega_window(gs, l)) omega.insert(r);
      for (const Root& g : gs.phi2()) {
        if (cur.value_of(g) == 0 || omega.count(g)) continue;
        if (mult_of(gs, g, v.mark(l)) != 1 || mult_of(gs, g, v.mark(l + 1)) != 1)
          continue;
        int s = 0, t = 0;
        if (!is_difference_root(g, &s, &t))
          throw std::logic_error("non-difference root in a faithfulness window");
        if (best_s < 0 || std::make_pair(s, t) < std::make_pair(best_s, best_t)) {
          best_s = s;
          best_t = t;
          best_l = l;
        }
      }
    }
    if (best_s < 0) break;

    const int tp = best_s + v.mark(best_l + 1) - v.mark(best_l - 1);
    const int block = best_l + 1;  // columns t, t' sit past mark i_{l+1}
    Root beta = eps_minus(dim, best_s, best_t);
    Root betap = eps_minus(dim, best_s, tp);
    Root delta = eps_minus(dim, best_t, tp);
    const long long sigma = gs.basis().bracket(delta, beta).coefficient;  // +-1

    for (;;) {
      long long val = cur.value_of(beta);
      if (val == 0) break;
      long long other = cur.value_of(betap);
      if (other == 0) {
        cur = apply_swap(gs, cur, block, best_t, tp);
        continue;
      }
      if (field) {
        // single-step elimination: val + gamma*sigma*other = 0 in char 2
        uint64_t gamma = f.mul(static_cast<uint64_t>(val) & f.mask(),
                               f.inv(static_cast<uint64_t>(other) & f.mask()));
        cur = apply_rho(gs, cur, block, best_t, tp, static_cast<long long>(gamma));
      } else {
        long long q = val / (sigma * other);  // truncated: |val - q*sigma*other| < |other|
        if (q == 0) {
          cur = apply_swap(gs, cur, block, best_t, tp);
          continue;
        }
        cur = apply_rho(gs, cur, block, best_t, tp, -q);
      }
    }
  }
  return cur;
}

PQPartition pq_partition(const GradedSystem& gs) {
  SeqView v = seq_view(gs);
  const int k = v.k();
  const int L = std::max(0, v.fork_case() ? k - 1 : k - 2);
  PQPartition pq;
  if (k == 0) {  // type D fork-only diagram: a single block
    pq.final_block = gs.phi1();
    return pq;
  }
  pq.q_sets.push_back(y_set(gs, 1));
  for (int l = 1; l <= L; ++l) {
    std::set<Root> omega;
    for (const Root& r : omega_window(gs, l)) omega.insert(r);
    std::vector<Root> ynext = y_set(gs, l + 1);
    std::vector<Root> p, q;
    for (const Root& alpha : ynext) {
      bool in_p = false;
      for (const Root& beta : pq.q_sets.back()) {
        Root sum = beta + alpha;
        if (gs.system().positive_index(sum) >= 0 && omega.count(sum)) {
          in_p = true;
          break;
        }
      }
      (in_p ? p : q).push_back(alpha);
    }
    if (p.size() != pq.q_sets.back().size())
      throw std::logic_error("|P_l| = |Q_l| failed");
    pq.p_sets.push_back(std::move(p));
    pq.q_sets.push_back(std::move(q));
  }
  pq.final_block = pq.q_sets.back();
  std::vector<Root> last = v.fork_case() ? y_set(gs, k + 1) : y_set(gs, k);
  // within the final block keep the canonical root order
  std::set<Root> members(pq.final_block.begin(), pq.final_block.end());
  for (const Root& r : last) members.insert(r);
  pq.final_block.clear();
  for (const Root& r : gs.phi1())
    if (members.count(r)) pq.final_block.push_back(r);
  return pq;
}

namespace {

mpz_class pairing_det(const GradedSystem& gs, const LambdaAssignment& lam,
                      const std::vector<Root>& rows, const std::vector<Root>& cols) {
  const int n = static_cast<int>(rows.size());
  if (static_cast<int>(cols.size()) != n)
    throw std::logic_error("pairing block is not square");
  std::vector<mpz_class> a(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Root sum = rows[i] + cols[j];
      int var = gs.phi2_index(sum);
      if (var < 0) continue;
      long long coeff = gs.basis().bracket(rows[i], cols[j]).coefficient;
      a[static_cast<size_t>(i) * n + j] = static_cast<long>(coeff) *
                                          static_cast<long>(lam.value_of(sum));
    }
  return bareiss_det(std::move(a), n);
}

}  // namespace

Factorization factor_determinant(const GradedSystem& gs, const LambdaAssignment& lam) {
  if (lam.ring.kind != CoefficientRing::Kind::Integers)
    throw std::invalid_argument("factorization is computed over the integers");
  SeqView v = seq_view(gs);
  const int L = std::max(0, v.fork_case() ? v.k() - 1 : v.k() - 2);
  if (L >= 1 && !is_faithful(gs, lam))
    throw std::invalid_argument("factor_determinant requires a faithful lambda");
  PQPartition pq = pq_partition(gs);
  Factorization out;
  mpz_class prod = 1;
  for (int l = 0; l < L; ++l) {
    out.block_dets.push_back(pairing_det(gs, lam, pq.q_sets[l], pq.p_sets[l]));
    prod *= out.block_dets.back();
  }
  // final antisymmetric block over the remaining roots
  {
    const auto& f = pq.final_block;
    const int n = static_cast<int>(f.size());
    std::vector<mpz_class> a(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Root sum = f[i] + f[j];
        if (gs.phi2_index(sum) < 0) continue;
        long long coeff = gs.basis().bracket(f[i], f[j]).coefficient;
        a[static_cast<size_t>(i) * n + j] = static_cast<long>(coeff) *
                                            static_cast<long>(lam.value_of(sum));
      }
    out.final_det = bareiss_det(std::move(a), n);
  }
  out.full_det = det_exact(build_gram_z(gs, lam));
  mpz_class rhs = prod * prod * out.final_det;
  out.identity_holds = (out.full_det == rhs || out.full_det == -rhs);
  return out;
}

}  // namespace wdg
