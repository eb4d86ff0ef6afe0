#include "wdg/gram.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdg {

CoefficientRing CoefficientRing::gf2k(int k) {
  if (k < 2 || k > 64) throw std::invalid_argument("field exponent must be in [2,64]");
  return {Kind::GF2k, k};
}

std::string to_string(const CoefficientRing& r) {
  switch (r.kind) {
    case CoefficientRing::Kind::Integers: return "Z";
    case CoefficientRing::Kind::GF2: return "GF2";
    case CoefficientRing::Kind::GF2k: return "GF2^" + std::to_string(r.k);
  }
  return "Z";
}

CoefficientRing ring_from_string(const std::string& s) {
  if (s == "Z" || s == "z") return CoefficientRing::integers();
  if (s == "GF2" || s == "gf2") return CoefficientRing::gf2();
  for (const char* prefix : {"GF2^", "gf2k:", "gf2^"}) {
    std::string p(prefix);
    if (s.rfind(p, 0) == 0) return CoefficientRing::gf2k(std::stoi(s.substr(p.size())));
  }
  throw std::invalid_argument("unknown ring: " + s);
}

GradedSystem::GradedSystem(WeightedDiagram d)
    : m_diagram(std::move(d)), m_basis(get_chevalley(m_diagram.lie_type, m_diagram.rank)) {
  m_phi1 = phi_d(m_diagram, system(), 1);
  m_phi2 = phi_d(m_diagram, system(), 2);
  for (size_t i = 0; i < m_phi2.size(); ++i) m_phi2_index[m_phi2[i]] = static_cast<int>(i);
}

int GradedSystem::phi2_index(const Root& r) const {
  auto it = m_phi2_index.find(r);
  return it == m_phi2_index.end() ? -1 : it->second;
}

int GradedSystem::weight_of(const Root& r) const {
  return extended_weight(m_diagram, system(), r);
}

int GramStructure::used_count() const {
  return static_cast<int>(std::count(var_used.begin(), var_used.end(), 1));
}

GramStructure gram_structure(const GradedSystem& gs) {
  GramStructure st;
  const auto& phi1 = gs.phi1();
  st.order = static_cast<int>(phi1.size());
  st.var_used.assign(gs.phi2().size(), 0);
  for (int i = 0; i < st.order; ++i)
    for (int j = i + 1; j < st.order; ++j) {
      Root sum = phi1[i] + phi1[j];
      int var = gs.phi2_index(sum);
      if (var < 0) continue;  // beta_i + beta_j not a root of weight 2
      BracketResult br = gs.basis().bracket(phi1[i], phi1[j]);
      st.entries.push_back({i, j, var, br.coefficient});
      st.var_used[var] = 1;
    }
  return st;
}

namespace {

void check_lambda_support(const GradedSystem& gs, const LambdaAssignment& lam) {
  for (const auto& [root, value] : lam.values) {
    (void)value;
    if (gs.phi2_index(root) < 0)
      throw std::invalid_argument("lambda keyed outside Phi_{d,2}");
  }
}

}  // namespace

GramMatrix<long long> build_gram_z(const GradedSystem& gs, const LambdaAssignment& lam) {
  if (lam.ring.kind != CoefficientRing::Kind::Integers)
    throw std::invalid_argument("integer Gram matrix needs an integer lambda");
  check_lambda_support(gs, lam);
  GramMatrix<long long> g;
  g.order = gs.phi1();
  g.ring = lam.ring;
  const int n = g.n();
  g.entries.assign(static_cast<size_t>(n) * n, 0);
  GramStructure st = gram_structure(gs);
  std::vector<long long> x(gs.phi2().size(), 0);
  for (const auto& [root, value] : lam.values) x[gs.phi2_index(root)] = value;
  for (const auto& e : st.entries) {
    long long v = e.coeff * x[e.var];
    g.entries[static_cast<size_t>(e.i) * n + e.j] = v;
    g.entries[static_cast<size_t>(e.j) * n + e.i] = -v;
  }
  return g;
}

Gf2Matrix build_gram_gf2(const GradedSystem& gs, const LambdaAssignment& lam) {
  if (lam.ring.kind == CoefficientRing::Kind::GF2k)
    throw std::invalid_argument("GF2 Gram matrix needs a GF2 or integer lambda");
  check_lambda_support(gs, lam);
  const int n = static_cast<int>(gs.phi1().size());
  Gf2Matrix g(n, n);
  GramStructure st = gram_structure(gs);
  std::vector<long long> x(gs.phi2().size(), 0);
  for (const auto& [root, value] : lam.values) x[gs.phi2_index(root)] = value;
  for (const auto& e : st.entries)
    if ((e.coeff * x[e.var]) & 1) {
      g.flip(e.i, e.j);
      g.flip(e.j, e.i);
    }
  return g;
}

GramMatrix<uint64_t> build_gram_gf2k(const GradedSystem& gs, const LambdaAssignment& lam,
                                     const Gf2Field& field) {
  if (lam.ring.kind != CoefficientRing::Kind::GF2k || lam.ring.k != field.degree())
    throw std::invalid_argument("GF(2^k) Gram matrix needs a matching lambda");
  check_lambda_support(gs, lam);
  GramMatrix<uint64_t> g;
  g.order = gs.phi1();
  g.ring = lam.ring;
  const int n = g.n();
  g.entries.assign(static_cast<size_t>(n) * n, 0);
  GramStructure st = gram_structure(gs);
  std::vector<uint64_t> x(gs.phi2().size(), 0);
  for (const auto& [root, value] : lam.values)
    x[gs.phi2_index(root)] = static_cast<uint64_t>(value) & field.mask();
  for (const auto& e : st.entries) {
    // characteristic 2: the coefficient only matters mod 2, signs vanish
    uint64_t v = (e.coeff & 1) ? x[e.var] : 0;
    g.entries[static_cast<size_t>(e.i) * n + e.j] = v;
    g.entries[static_cast<size_t>(e.j) * n + e.i] = v;
  }
  return g;
}

mpz_class bareiss_det(std::vector<mpz_class> a, int n) {
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (a[static_cast<size_t>(r) * n + c] != 0) { pivot = r; break; }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<size_t>(pivot) * n + j], a[static_cast<size_t>(c) * n + j]);
      sign = -sign;
    }
    const mpz_class& pv = a[static_cast<size_t>(c) * n + c];
    for (int r = c + 1; r < n; ++r) {
      for (int j = c + 1; j < n; ++j) {
        mpz_class num = a[static_cast<size_t>(r) * n + j] * pv -
                        a[static_cast<size_t>(r) * n + c] * a[static_cast<size_t>(c) * n + j];
        mpz_divexact(a[static_cast<size_t>(r) * n + j].get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[static_cast<size_t>(r) * n + c] = 0;
    }
    prev = pv;
  }
  return sign * a[static_cast<size_t>(n - 1) * n + (n - 1)];
}

mpz_class det_exact(const GramMatrix<long long>& g) {
  const int n = g.n();
  std::vector<mpz_class> a(static_cast<size_t>(n) * n);
  for (size_t i = 0; i < a.size(); ++i) a[i] = static_cast<long>(g.entries[i]);
  return bareiss_det(std::move(a), n);
}

bool det_gf2(const Gf2Matrix& g) { return gf2_det(g); }

uint64_t det_gf2k(const Gf2Field& field, const GramMatrix<uint64_t>& g) {
  return gf2k_det(field, g.entries, g.n());
}

bool is_unimodular(const GradedSystem& gs, const LambdaAssignment& lam) {
  if (lam.ring.kind != CoefficientRing::Kind::Integers)
    throw std::invalid_argument("unimodularity is an integer-lambda notion");
  if (gs.phi1().empty()) return true;  // g_{Z,d}(1) = {0}
  mpz_class det = det_exact(build_gram_z(gs, lam));
  return det == 1 || det == -1;
}

}  // namespace wdg
