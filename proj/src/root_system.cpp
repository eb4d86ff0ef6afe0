#include "wdg/root_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdg {

char to_char(LieType t) { return static_cast<char>(t); }

LieType lie_type_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return LieType::A;
    case 'B': case 'b': return LieType::B;
    case 'C': case 'c': return LieType::C;
    case 'D': case 'd': return LieType::D;
    default: throw std::invalid_argument(std::string("unknown Lie type: ") + c);
  }
}

int min_rank(LieType t) {
  switch (t) {
    case LieType::A: return 1;
    case LieType::B: return 2;
    case LieType::C: return 2;
    case LieType::D: return 3;
  }
  return 1;
}

Root Root::operator+(const Root& o) const {
  Root r = *this;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

bool Root::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Root eps_minus(int dim, int i, int j) {
  Root r{std::vector<int>(dim, 0)};
  r.coords[i - 1] += 1;
  r.coords[j - 1] -= 1;
  return r;
}

Root eps_plus(int dim, int i, int j) {
  Root r{std::vector<int>(dim, 0)};
  r.coords[i - 1] += 1;
  r.coords[j - 1] += 1;
  return r;
}

Root eps_single(int dim, int i, int scale) {
  Root r{std::vector<int>(dim, 0)};
  r.coords[i - 1] = scale;
  return r;
}

int RootSystem::positive_index(const Root& r) const {
  auto it = m_positive_index.find(r);
  return it == m_positive_index.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Root& r) const {
  return positive_index(r) >= 0 || positive_index(-r) >= 0;
}

namespace {

// Closed-form simple-root expansions per type; verified against the coordinate
// sum in the unit tests.
std::vector<int> expansion(LieType t, int n, const Root& beta) {
  std::vector<int> m(n, 0);
  const auto& c = beta.coords;
  auto range1 = [&](int lo, int hi, int v) {  // alpha_lo..alpha_hi get v (1-based)
    for (int l = lo; l <= hi; ++l) m[l - 1] += v;
  };
  // locate the (at most two) nonzero coordinates
  int i = 0, j = 0;  // 1-based positions
  for (int p = 0; p < static_cast<int>(c.size()); ++p) {
    if (c[p] != 0) {
      if (i == 0) i = p + 1;
      else j = p + 1;
    }
  }
  switch (t) {
    case LieType::A:
      range1(i, j - 1, 1);  // e_i - e_j = a_i + ... + a_{j-1}
      break;
    case LieType::B:
      if (j == 0) range1(i, n, 1);                         // e_i
      else if (c[j - 1] < 0) range1(i, j - 1, 1);          // e_i - e_j
      else { range1(i, j - 1, 1); range1(j, n, 2); }       // e_i + e_j
      break;
    case LieType::C:
      if (j == 0) { range1(i, n - 1, 2); m[n - 1] += 1; }  // 2e_i
      else if (c[j - 1] < 0) range1(i, j - 1, 1);
      else { range1(i, j - 1, 1); range1(j, n - 1, 2); m[n - 1] += 1; }
      break;
    case LieType::D:
      if (c[j - 1] < 0) range1(i, j - 1, 1);               // e_i - e_j (incl. j = n)
      else if (j == n) { range1(i, n - 2, 1); m[n - 1] += 1; }  // e_i + e_n
      else {                                               // e_i + e_j, j < n
        range1(i, j - 1, 1);
        range1(j, n - 2, 2);
        m[n - 2] += 1;
        m[n - 1] += 1;
      }
      break;
  }
  return m;
}

}  // namespace

RootSystem build_root_system(LieType t, int n) {
  if (n < min_rank(t))
    throw std::invalid_argument("rank " + std::to_string(n) + " invalid for type " +
                                to_char(t));
  RootSystem sys;
  sys.lie_type = t;
  sys.rank = n;
  const int dim = (t == LieType::A) ? n + 1 : n;

  for (int i = 1; i <= n; ++i) {
    if (t == LieType::A || i < n) {
      sys.simple_roots.push_back(eps_minus(dim, i, i + 1));
    } else {
      switch (t) {
        case LieType::B: sys.simple_roots.push_back(eps_single(dim, n, 1)); break;
        case LieType::C: sys.simple_roots.push_back(eps_single(dim, n, 2)); break;
        case LieType::D: sys.simple_roots.push_back(eps_plus(dim, n - 1, n)); break;
        default: break;
      }
    }
  }

  auto add = [&](const Root& r) {
    sys.m_positive_index[r] = static_cast<int>(sys.positive_roots.size());
    sys.positive_roots.push_back(r);
  };
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j) add(eps_minus(dim, i, j));
  if (t != LieType::A) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) add(eps_plus(dim, i, j));
    if (t == LieType::B)
      for (int k = 1; k <= n; ++k) add(eps_single(dim, k, 1));
    if (t == LieType::C)
      for (int k = 1; k <= n; ++k) add(eps_single(dim, k, 2));
  }

  sys.multiplicities.reserve(sys.positive_roots.size());
  for (const Root& beta : sys.positive_roots)
    sys.multiplicities.push_back(expansion(t, n, beta));
  return sys;
}

int multiplicity(const RootSystem& sys, const Root& beta, int simple_index) {
  if (simple_index < 1 || simple_index > sys.rank)
    throw std::invalid_argument("simple root index out of range");
  int p = sys.positive_index(beta);
  if (p >= 0) return sys.multiplicities[p][simple_index - 1];
  p = sys.positive_index(-beta);
  if (p >= 0) return -sys.multiplicities[p][simple_index - 1];
  throw std::invalid_argument("beta is not a root of the system");
}

}  // namespace wdg
