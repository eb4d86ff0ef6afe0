#include "wdg/chevalley.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wdg {

bool IntMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; });
}

IntMatrix commutator(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix z(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      long long xik = x.at(i, k), yik = y.at(i, k);
      if (xik == 0 && yik == 0) continue;
      for (int j = 0; j < x.n; ++j)
        z.at(i, j) += xik * y.at(k, j) - yik * x.at(k, j);
    }
  return z;
}

namespace {

IntMatrix unit(int order, int r, int c, long long v) {
  IntMatrix m(order);
  m.at(r - 1, c - 1) = v;  // 1-based in, 0-based storage
  return m;
}

// Root vectors in the defining representation.  Index layout for B/C/D:
// 1..n carry +e_i, n+1..2n carry -e_i, and type B appends a null coordinate.
IntMatrix realize(LieType t, int n, const Root& root) {
  const auto& c = root.coords;
  int i = 0, j = 0;  // positions of nonzero coords, 1-based
  for (int p = 0; p < static_cast<int>(c.size()); ++p) {
    if (c[p] != 0) {
      if (i == 0) i = p + 1;
      else j = p + 1;
    }
  }
  if (t == LieType::A) {
    int neg = c[i - 1] < 0 ? i : j;
    int pos = neg == i ? j : i;
    return unit(n + 1, pos, neg, 1);  // e_{e_i - e_j} = E_ij
  }
  const int order = (t == LieType::B) ? 2 * n + 1 : 2 * n;
  IntMatrix m(order);
  if (j != 0 && c[i - 1] * c[j - 1] < 0) {  // e_i - e_j family (either sign)
    int a = c[i - 1] > 0 ? i : j;
    int b = a == i ? j : i;
    m.at(a - 1, b - 1) = 1;
    m.at(n + b - 1, n + a - 1) = -1;
    return m;
  }
  const bool positive = c[i - 1] > 0;
  if (t == LieType::C) {
    if (j == 0) {  // +-2e_i
      return positive ? unit(order, i, n + i, 1) : unit(order, n + i, i, 1);
    }
    if (positive) {  // e_i + e_j
      m.at(i - 1, n + j - 1) = 1;
      m.at(j - 1, n + i - 1) = 1;
    } else {
      m.at(n + i - 1, j - 1) = 1;
      m.at(n + j - 1, i - 1) = 1;
    }
    return m;
  }
  // orthogonal models (B and D)
  if (j == 0) {  // type B short roots +-e_i
    if (positive) {
      m.at(i - 1, 2 * n) = 2;
      m.at(2 * n, n + i - 1) = -1;
    } else {
      m.at(2 * n, i - 1) = 1;
      m.at(n + i - 1, 2 * n) = -2;
    }
    return m;
  }
  if (positive) {  // e_i + e_j
    m.at(i - 1, n + j - 1) = 1;
    m.at(j - 1, n + i - 1) = -1;
  } else {
    m.at(n + j - 1, i - 1) = 1;
    m.at(n + i - 1, j - 1) = -1;
  }
  return m;
}

}  // namespace

ChevalleyBasis::ChevalleyBasis(RootSystem sys) : m_sys(std::move(sys)) {
  const size_t np = m_sys.positive_roots.size();
  m_matrices.reserve(2 * np);
  for (size_t p = 0; p < 2 * np; ++p) {
    Root r = p < np ? m_sys.positive_roots[p] : -m_sys.positive_roots[p - np];
    m_matrices.push_back(realize(m_sys.lie_type, m_sys.rank, r));
    const IntMatrix& m = m_matrices.back();
    for (int idx = 0; idx < m.n * m.n; ++idx)
      if (m.a[idx] != 0) {
        m_pivot.emplace_back(idx / m.n, idx % m.n);
        break;
      }
  }
}

int ChevalleyBasis::root_slot(const Root& r) const {
  int p = m_sys.positive_index(r);
  if (p >= 0) return p;
  p = m_sys.positive_index(-r);
  if (p >= 0) return p + static_cast<int>(m_sys.positive_roots.size());
  return -1;
}

const IntMatrix& ChevalleyBasis::matrix_of(const Root& r) const {
  int s = root_slot(r);
  if (s < 0) throw std::invalid_argument("not a root of the system");
  return m_matrices[s];
}

BracketResult ChevalleyBasis::bracket(const Root& alpha, const Root& beta) const {
  Root sum = alpha + beta;
  if (sum.is_zero())
    throw std::invalid_argument("bracket of opposite roots lands in the torus");
  int sa = root_slot(alpha), sb = root_slot(beta);
  if (sa < 0 || sb < 0) throw std::invalid_argument("not a root of the system");
  int ss = root_slot(sum);
  if (ss < 0) return {0, std::nullopt};
  IntMatrix z = commutator(m_matrices[sa], m_matrices[sb]);
  auto [pr, pc] = m_pivot[ss];
  const IntMatrix& es = m_matrices[ss];
  long long coeff = z.at(pr, pc) / es.at(pr, pc);
  // the commutator must be an exact multiple of e_{alpha+beta}
  for (int idx = 0; idx < z.n * z.n; ++idx)
    if (z.a[idx] != coeff * es.a[idx])
      throw std::logic_error("bracket does not lie in the expected root space");
  if (coeff == 0)
    throw std::logic_error("vanishing bracket on a root-sum pair");
  return {coeff, sum};
}

std::shared_ptr<const ChevalleyBasis> get_chevalley(LieType t, int rank) {
  static std::mutex mtx;
  static std::map<std::pair<char, int>, std::shared_ptr<const ChevalleyBasis>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(to_char(t), rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto basis = std::make_shared<const ChevalleyBasis>(build_root_system(t, rank));
  cache[key] = basis;
  return basis;
}

}  // namespace wdg
