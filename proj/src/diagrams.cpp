#include "wdg/diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wdg {

std::string to_string(DVariant v) {
  switch (v) {
    case DVariant::none: return "none";
    case DVariant::plus: return "plus";
    case DVariant::minus: return "minus";
  }
  return "none";
}

DVariant dvariant_from_string(const std::string& s) {
  if (s == "none" || s.empty()) return DVariant::none;
  if (s == "plus" || s == "+") return DVariant::plus;
  if (s == "minus" || s == "-") return DVariant::minus;
  throw std::invalid_argument("unknown variant: " + s);
}

std::string PartitionInput::id() const {
  std::string out;
  out += to_char(lie_type);
  out += std::to_string(rank);
  out += " mu=";
  for (size_t i = 0; i < mu.size(); ++i)
    out += (i ? "." : "") + std::to_string(mu[i]);
  out += " nu=";
  for (size_t i = 0; i < nu.size(); ++i)
    out += (i ? "." : "") + std::to_string(nu[i]);
  if (variant != DVariant::none) out += " var=" + to_string(variant);
  return out;
}

namespace {

long long sum_of(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0LL);
}

bool weakly_decreasing(const std::vector<int>& v) {
  return std::is_sorted(v.rbegin(), v.rend());
}

bool strictly_decreasing(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] >= v[i - 1]) return false;
  return true;
}

}  // namespace

void validate(const PartitionInput& in) {
  if (in.rank < min_rank(in.lie_type))
    throw std::invalid_argument("rank too small for type");
  for (int p : in.mu)
    if (p <= 0) throw std::invalid_argument("mu parts must be positive");
  for (int p : in.nu)
    if (p <= 0) throw std::invalid_argument("nu parts must be positive");
  if (!weakly_decreasing(in.mu))
    throw std::invalid_argument("mu must be weakly decreasing");
  if (!strictly_decreasing(in.nu))
    throw std::invalid_argument("nu parts must be distinct");
  const long long smu = sum_of(in.mu), snu = sum_of(in.nu);
  switch (in.lie_type) {
    case LieType::A:
      if (!in.nu.empty()) throw std::invalid_argument("type A takes no nu");
      if (smu != in.rank + 1) throw std::invalid_argument("|mu| must equal rank+1");
      break;
    case LieType::C:
      if (smu + snu != in.rank) throw std::invalid_argument("|mu|+|nu| must equal rank");
      break;
    case LieType::B:
      if (2 * smu + snu != 2 * in.rank + 1)
        throw std::invalid_argument("2|mu|+|nu| must equal 2*rank+1");
      for (int p : in.nu)
        if (p % 2 == 0) throw std::invalid_argument("nu parts must be odd");
      break;
    case LieType::D:
      if (2 * smu + snu != 2 * in.rank)
        throw std::invalid_argument("2|mu|+|nu| must equal 2*rank");
      for (int p : in.nu)
        if (p % 2 == 0) throw std::invalid_argument("nu parts must be odd");
      break;
  }
  if (in.lie_type == LieType::D) {
    const bool very_even =
        in.nu.empty() && std::all_of(in.mu.begin(), in.mu.end(),
                                     [](int p) { return p % 2 == 0; });
    if (very_even && in.variant == DVariant::none)
      throw std::invalid_argument("very-even type D input needs a variant");
    if (!very_even && in.variant != DVariant::none)
      throw std::invalid_argument("variant only applies to very-even type D inputs");
  } else if (in.variant != DVariant::none) {
    throw std::invalid_argument("variant only applies to type D");
  }
}

long long DivisorSequence::total() const { return sum_of(divisors); }

DivisorSequence divisors_from_input(const PartitionInput& in) {
  validate(in);
  DivisorSequence seq;
  seq.lie_type = in.lie_type;
  switch (in.lie_type) {
    case LieType::A:
      seq.divisors = in.mu;
      break;
    case LieType::C:
      for (int p : in.mu) { seq.divisors.push_back(p); seq.divisors.push_back(p); }
      for (int p : in.nu) seq.divisors.push_back(2 * p);
      break;
    case LieType::B:
    case LieType::D:
      for (int p : in.mu) { seq.divisors.push_back(p); seq.divisors.push_back(p); }
      for (int p : in.nu) seq.divisors.push_back(p);
      break;
  }
  std::sort(seq.divisors.begin(), seq.divisors.end());
  return seq;
}

PartitionInput input_from_divisors(const DivisorSequence& seq, DVariant variant) {
  std::map<int, int> mult;
  for (int v : seq.divisors) ++mult[v];
  PartitionInput in;
  in.lie_type = seq.lie_type;
  in.variant = variant;
  const long long total = seq.total();
  switch (seq.lie_type) {
    case LieType::A:
      in.rank = static_cast<int>(total) - 1;
      in.mu = seq.divisors;
      std::sort(in.mu.rbegin(), in.mu.rend());
      break;
    case LieType::C:
      in.rank = static_cast<int>(total / 2);
      for (auto [v, m] : mult) {
        if (v % 2 == 1) {
          if (m % 2) throw std::invalid_argument("odd divisor with odd multiplicity");
          for (int c = 0; c < m / 2; ++c) in.mu.push_back(v);
        } else {
          if (m % 2) in.nu.push_back(v / 2);
          for (int c = 0; c < m / 2; ++c) in.mu.push_back(v);
        }
      }
      break;
    case LieType::B:
    case LieType::D:
      in.rank = static_cast<int>((seq.lie_type == LieType::B) ? (total - 1) / 2
                                                              : total / 2);
      for (auto [v, m] : mult) {
        if (v % 2 == 0) {
          if (m % 2) throw std::invalid_argument("even divisor with odd multiplicity");
          for (int c = 0; c < m / 2; ++c) in.mu.push_back(v);
        } else {
          if (m % 2) in.nu.push_back(v);
          for (int c = 0; c < m / 2; ++c) in.mu.push_back(v);
        }
      }
      break;
  }
  std::sort(in.mu.rbegin(), in.mu.rend());
  std::sort(in.nu.rbegin(), in.nu.rend());
  validate(in);
  return in;
}

std::vector<int> xi_sequence(const DivisorSequence& seq) {
  std::vector<int> xi;
  xi.reserve(static_cast<size_t>(seq.total()));
  for (int m : seq.divisors)
    for (int v = m - 1; v >= 1 - m; v -= 2) xi.push_back(v);
  std::sort(xi.rbegin(), xi.rend());
  return xi;
}

WeightedDiagram diagram_from_divisors(const DivisorSequence& seq, DVariant variant) {
  WeightedDiagram d;
  d.lie_type = seq.lie_type;
  const long long total = seq.total();
  switch (seq.lie_type) {
    case LieType::A: d.rank = static_cast<int>(total) - 1; break;
    case LieType::B: d.rank = static_cast<int>((total - 1) / 2); break;
    case LieType::C:
    case LieType::D: d.rank = static_cast<int>(total / 2); break;
  }
  const int n = d.rank;
  if (n <= 0) return d;  // fully collapsed reduction endpoint
  const std::vector<int> xi = xi_sequence(seq);
  if (std::all_of(xi.begin(), xi.end(), [](int v) { return v == 0; })) {
    d.weights.assign(n, 0);  // all divisors 1: the zero diagram in every type
    return d;
  }
  d.weights.resize(n);
  switch (seq.lie_type) {
    case LieType::A:
      for (int i = 0; i < n; ++i) d.weights[i] = xi[i] - xi[i + 1];
      break;
    case LieType::B:
      for (int i = 0; i + 1 < n; ++i) d.weights[i] = xi[i] - xi[i + 1];
      d.weights[n - 1] = xi[n - 1];
      break;
    case LieType::C:
      for (int i = 0; i + 1 < n; ++i) d.weights[i] = xi[i] - xi[i + 1];
      d.weights[n - 1] = 2 * xi[n - 1];
      break;
    case LieType::D: {
      if (n < 2) throw std::logic_error("nonzero type D diagram at rank < 2");
      for (int i = 0; i + 2 < n; ++i) d.weights[i] = xi[i] - xi[i + 1];
      d.weights[n - 2] = xi[n - 2] - xi[n - 1];
      d.weights[n - 1] = xi[n - 2] + xi[n - 1];
      if (variant == DVariant::minus) std::swap(d.weights[n - 2], d.weights[n - 1]);
      break;
    }
  }
  for (int w : d.weights)
    if (w < 0 || w > 2)
      throw std::logic_error("diagram weight outside {0,1,2}: " + std::to_string(w));
  return d;
}

WeightedDiagram diagram_from_input(const PartitionInput& in) {
  WeightedDiagram d = diagram_from_divisors(divisors_from_input(in), in.variant);
  d.source = in;
  if (d.rank != in.rank) throw std::logic_error("rank mismatch in diagram construction");
  return d;
}

bool is_odd(const WeightedDiagram& d) {
  return !d.weights.empty() &&
         *std::max_element(d.weights.begin(), d.weights.end()) == 1;
}

bool is_zero(const WeightedDiagram& d) {
  return d.weights.empty() ||
         *std::max_element(d.weights.begin(), d.weights.end()) == 0;
}

int extended_weight(const WeightedDiagram& d, const RootSystem& sys, const Root& beta) {
  int p = sys.positive_index(beta);
  int sign = 1;
  if (p < 0) {
    p = sys.positive_index(-beta);
    sign = -1;
    if (p < 0) throw std::invalid_argument("beta is not a root");
  }
  int w = 0;
  for (int l = 0; l < sys.rank; ++l) w += d.weights[l] * sys.multiplicities[p][l];
  return sign * w;
}

std::vector<Root> phi_d(const WeightedDiagram& d, const RootSystem& sys, int i) {
  std::vector<Root> out;
  for (size_t p = 0; p < sys.positive_roots.size(); ++p) {
    int w = 0;
    for (int l = 0; l < sys.rank; ++l) w += d.weights[l] * sys.multiplicities[p][l];
    if (w == i) out.push_back(sys.positive_roots[p]);
    if (-w == i && i != 0) out.push_back(-sys.positive_roots[p]);
  }
  if (i == 0)  // negatives of weight-0 positives, after the positives
    for (size_t p = 0, n0 = out.size(); p < n0; ++p) out.push_back(-out[p]);
  return out;
}

DivisorSequence reduce_step(const DivisorSequence& seq) {
  WeightedDiagram d = diagram_from_divisors(seq);
  if (is_zero(d) || is_odd(d))
    throw std::invalid_argument("reduce_step requires a non-odd nonzero diagram");
  const std::vector<int>& v = seq.divisors;
  const int r = v.back();
  int count_r = 0;
  while (count_r < static_cast<int>(v.size()) && v[v.size() - 1 - count_r] == r)
    ++count_r;
  DivisorSequence out;
  out.lie_type = seq.lie_type;
  if (count_r == static_cast<int>(v.size())) {
    // single divisor value: the sequence collapses to a zero diagram
    if (r % 2 == 1) out.divisors.assign(v.size(), 1);
    return out;
  }
  const int s = v[v.size() - 1 - count_r];
  if (r - s < 2) throw std::logic_error("non-odd diagram with adjacent divisor values");
  const int t = r - 2 * ((r - s) / 2);
  out.divisors.assign(v.begin(), v.end() - count_r);
  out.divisors.insert(out.divisors.end(), count_r, t);
  std::sort(out.divisors.begin(), out.divisors.end());
  return out;
}

ReductionTrace reduce_to_odd(const DivisorSequence& seq) {
  ReductionTrace trace;
  trace.steps.push_back(seq);
  for (int guard = 0; guard < 64; ++guard) {
    WeightedDiagram d = diagram_from_divisors(trace.steps.back());
    if (is_zero(d) || is_odd(d)) return trace;
    trace.steps.push_back(reduce_step(trace.steps.back()));
  }
  throw std::logic_error("reduction failed to terminate");
}

namespace {

// Shared shape of the spade conditions: between consecutive divisors of the
// marker parity an even number of the counted parity, and a fixed parity of
// counted divisors after the last marker.
bool spade(const std::vector<int>& v, int marker_mod2, int after_mod2) {
  int since = 0;
  bool seen_marker = false;
  bool ok = true;
  for (int x : v) {
    if (x % 2 == marker_mod2) {
      if (seen_marker && since % 2 != 0) ok = false;
      seen_marker = true;
      since = 0;
    } else {
      ++since;
    }
  }
  if (!seen_marker) return true;  // no markers: no constraints
  return ok && since % 2 == after_mod2;
}

}  // namespace

bool is_special(const DivisorSequence& seq) {
  switch (seq.lie_type) {
    case LieType::A: return true;
    case LieType::C: return spade(seq.divisors, 1, 0);  // markers odd, evens counted
    case LieType::B: return spade(seq.divisors, 0, 1);  // markers even, odds counted
    case LieType::D: return spade(seq.divisors, 0, 0);
  }
  return true;
}

bool is_special(const PartitionInput& in) {
  return is_special(divisors_from_input(in));
}

DivisorSequence divisors_from_diagram(const WeightedDiagram& d) {
  const int n = d.rank;
  const auto& w = d.weights;
  std::vector<int> xi;  // representatives; the multiset is completed by mirroring
  switch (d.lie_type) {
    case LieType::A: {
      std::vector<long long> tail(n + 2, 0);
      for (int j = n; j >= 1; --j) tail[j] = tail[j + 1] + w[j - 1];
      long long sum = 0;
      for (int j = 1; j <= n + 1; ++j) sum += tail[j];
      if (sum % (n + 1) != 0) throw std::logic_error("inconsistent type A weights");
      long long c = -sum / (n + 1);
      for (int j = 1; j <= n + 1; ++j) xi.push_back(static_cast<int>(tail[j] + c));
      break;
    }
    case LieType::B: {
      std::vector<int> x(n + 1, 0);
      x[n] = w[n - 1];
      for (int j = n - 1; j >= 1; --j) x[j] = x[j + 1] + w[j - 1];
      for (int j = 1; j <= n; ++j) {
        xi.push_back(x[j]);
        xi.push_back(-x[j]);
      }
      xi.push_back(0);
      break;
    }
    case LieType::C: {
      if (w[n - 1] % 2 != 0) throw std::logic_error("inconsistent type C weights");
      std::vector<int> x(n + 1, 0);
      x[n] = w[n - 1] / 2;
      for (int j = n - 1; j >= 1; --j) x[j] = x[j + 1] + w[j - 1];
      for (int j = 1; j <= n; ++j) {
        xi.push_back(x[j]);
        xi.push_back(-x[j]);
      }
      break;
    }
    case LieType::D: {
      if ((w[n - 2] + w[n - 1]) % 2 != 0)
        throw std::logic_error("inconsistent type D weights");
      std::vector<int> x(n + 1, 0);
      x[n - 1] = (w[n - 2] + w[n - 1]) / 2;
      x[n] = (w[n - 1] - w[n - 2]) / 2;  // sign is irrelevant to the multiset
      for (int j = n - 2; j >= 1; --j) x[j] = x[j + 1] + w[j - 1];
      for (int j = 1; j <= n; ++j) {
        xi.push_back(x[j]);
        xi.push_back(-x[j]);
      }
      break;
    }
  }
  std::map<int, int> count;
  for (int v : xi) ++count[v];
  int vmax = 0;
  for (int v : xi) vmax = std::max(vmax, std::abs(v));
  DivisorSequence seq;
  seq.lie_type = d.lie_type;
  auto c_of = [&](int v) {
    auto it = count.find(v);
    return it == count.end() ? 0 : it->second;
  };
  for (int m = vmax + 1; m >= 1; --m) {
    int copies = c_of(m - 1) - c_of(m + 1);
    if (copies < 0) throw std::logic_error("weights do not come from divisors");
    seq.divisors.insert(seq.divisors.end(), copies, m);
  }
  std::sort(seq.divisors.begin(), seq.divisors.end());
  return seq;
}

namespace {

void check(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("odd sequence condition failed: ") + what);
}

}  // namespace

OddSequence odd_sequence(const WeightedDiagram& d) {
  if (!is_odd(d)) throw std::invalid_argument("odd_sequence requires an odd diagram");
  const int n = d.rank;
  OddSequence seq;
  for (int i = 1; i <= n; ++i)
    if (d.weights[i - 1] == 1) seq.marks.push_back(i);

  if (d.lie_type == LieType::A) {
    const int two_r_minus_2 = static_cast<int>(seq.marks.size());
    check(two_r_minus_2 % 2 == 0, "type A marks must pair symmetrically");
    const int r = two_r_minus_2 / 2 + 1;
    seq.symmetric.resize(2 * r);
    seq.symmetric[0] = 0;
    seq.symmetric[2 * r - 1] = n + 1;
    for (int t = 1; t <= 2 * r - 2; ++t) seq.symmetric[t] = seq.marks[t - 1];
    // s_l = s'_l and s_{l+2} <= s_l, where s_l is read off the symmetric sequence
    auto j = [&](int idx) { return seq.symmetric[idx - 1]; };  // 1-based
    std::vector<int> s(r + 1, 0);                              // s[1..r]
    s[1] = j(r + 1) - j(r);
    for (int l = 2; l <= r; ++l) {
      s[l] = j(r - l + 2) - j(r - l + 1);
      check(s[l] == j(r + l) - j(r + l - 1), "s_l = s'_l");
    }
    for (int l = 1; l + 2 <= r; ++l) check(s[l + 2] <= s[l], "s_{l+2} <= s_l");
    seq.gaps.assign(s.begin() + 1, s.end());
    return seq;
  }

  if (d.lie_type == LieType::D) {
    const int wn1 = d.weights[n - 2], wn = d.weights[n - 1];
    check(wn1 == wn, "fork weights of an odd type D diagram must agree");
    if (wn1 == 1) {
      seq.d_case = OddSequence::DCase::case1;
      seq.marks.pop_back();
      seq.marks.pop_back();  // drop the fork nodes n-1, n
      if (seq.marks.empty()) seq.excluded_family = true;
    } else {
      seq.d_case = OddSequence::DCase::case2;
    }
  }

  const int k = static_cast<int>(seq.marks.size());
  seq.gaps.resize(k);
  for (int l = 1; l <= k; ++l)
    seq.gaps[l - 1] = l == 1 ? seq.marks[0] : seq.marks[l - 1] - seq.marks[l - 2];

  auto s = [&](int l) { return seq.gap(l); };
  const int ik = k > 0 ? seq.marks.back() : 0;
  switch (d.lie_type) {
    case LieType::C:
      check(ik <= n - 1, "i_k <= n-1");
      for (int l = 1; l + 2 <= k; ++l) check(s(l) <= s(l + 2), "s_l <= s_{l+2}");
      for (int l = 1; l <= k; ++l)
        if ((l - (k - 1)) % 2 == 0) check(s(l) % 2 == 0, "s_l even at l = k-1 (mod 2)");
      if (k >= 2) check(s(k - 1) <= 2 * (n - ik), "s_{k-1} <= 2(n-i_k)");
      break;
    case LieType::B:
      for (int l = 1; l + 2 <= k; ++l) check(s(l) <= s(l + 2), "s_l <= s_{l+2}");
      for (int l = 1; l <= k; ++l)
        if ((l - k) % 2 == 0) check(s(l) % 2 == 0, "s_l even at l = k (mod 2)");
      if (k >= 2) check(s(k - 1) <= 2 * (n - ik) + 1, "s_{k-1} <= 2(n-i_k)+1");
      break;
    case LieType::D:
      if (seq.d_case == OddSequence::DCase::case1) {
        if (!seq.excluded_family) {
          check(ik <= n - 3, "i_k <= n-3");
          const int sk1 = n - 1 - ik;  // s_{k+1}
          auto sx = [&](int l) { return l == k + 1 ? sk1 : s(l); };
          for (int l = 1; l + 2 <= k + 1; ++l)
            check(sx(l) <= sx(l + 2), "s_l <= s_{l+2}");
          for (int l = 1; l <= k + 1; ++l)
            if ((l - (k + 1)) % 2 == 0)
              check(sx(l) % 2 == 0, "s_l even at l = k+1 (mod 2)");
          for (int l = 1; l <= k; ++l)
            if ((l - k) % 2 == 0) check(sx(l) <= 2, "s_l <= 2 at l = k (mod 2)");
        }
      } else {
        check(ik <= n - 2, "i_k <= n-2");
        for (int l = 1; l + 2 <= k; ++l) check(s(l) <= s(l + 2), "s_l <= s_{l+2}");
        for (int l = 1; l <= k; ++l)
          if ((l - k) % 2 == 0) check(s(l) % 2 == 0, "s_l even at l = k (mod 2)");
        if (k >= 2) check(s(k - 1) <= 2 * (n - ik), "s_{k-1} <= 2(n-i_k)");
      }
      break;
    case LieType::A:
      break;
  }
  return seq;
}

namespace {

// Partitions of n (parts descending) subject to a per-value multiplicity parity
// constraint: parity_mod2 < 0 disables it, otherwise parts == parity_class
// (mod 2) must occur an even number of times.
void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    int constrained_class, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    const bool constrained = constrained_class >= 0 && part % 2 == constrained_class;
    const int step = constrained ? 2 * part : part;
    if (step > remaining) continue;
    int copies = constrained ? 2 : 1;
    cur.insert(cur.end(), copies, part);
    // allow more copies of the same part via recursion with max_part = part
    gen_partitions(remaining - step, part, cur, constrained_class, out);
    cur.resize(cur.size() - copies);
  }
}

}  // namespace

std::vector<PartitionInput> enumerate_inputs(LieType t, int rank) {
  if (rank < min_rank(t)) throw std::invalid_argument("rank too small for type");
  int total = 0, constrained_class = -1;
  switch (t) {
    case LieType::A: total = rank + 1; break;
    case LieType::B: total = 2 * rank + 1; constrained_class = 0; break;
    case LieType::C: total = 2 * rank; constrained_class = 1; break;
    case LieType::D: total = 2 * rank; constrained_class = 0; break;
  }
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  gen_partitions(total, total, cur, constrained_class, parts);

  std::vector<PartitionInput> out;
  for (auto& p : parts) {
    DivisorSequence seq;
    seq.lie_type = t;
    seq.divisors = p;
    std::sort(seq.divisors.begin(), seq.divisors.end());
    const bool very_even =
        t == LieType::D &&
        std::all_of(p.begin(), p.end(), [](int v) { return v % 2 == 0; });
    if (very_even) {
      out.push_back(input_from_divisors(seq, DVariant::plus));
      out.push_back(input_from_divisors(seq, DVariant::minus));
    } else {
      out.push_back(input_from_divisors(seq, DVariant::none));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace wdg
