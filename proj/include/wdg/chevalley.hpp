#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "wdg/root_system.hpp"

namespace wdg {

// Dense square integer matrix, just big enough for the defining representations
// (order <= 2*rank+1 at the ranks this library targets).
struct IntMatrix {
  int n = 0;
  std::vector<long long> a;  // row-major

  explicit IntMatrix(int order = 0) : n(order), a(static_cast<size_t>(order) * order, 0) {}
  long long& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  long long at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }
  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix commutator(const IntMatrix& x, const IntMatrix& y);

struct BracketResult {
  long long coefficient = 0;          // 0 exactly when sum_root is absent
  std::optional<Root> sum_root;
};

// Chevalley basis realized inside the defining matrix model: sl(n+1) for type A,
// so(2n+1)/sp(2n)/so(2n) preserving a split bilinear form for B/C/D, so the
// diagonal torus carries the standard epsilon-characters.  Signs of the e_alpha
// come from the model; coefficient magnitudes obey |N| = r+1.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(RootSystem sys);

  const RootSystem& system() const { return m_sys; }
  const IntMatrix& matrix_of(const Root& r) const;

  // [e_alpha, e_beta] expressed in the basis.  alpha = -beta is rejected:
  // that bracket lands in the torus, which no Gram entry needs.
  BracketResult bracket(const Root& alpha, const Root& beta) const;

 private:
  int root_slot(const Root& r) const;  // positives then negatives, -1 if absent

  RootSystem m_sys;
  std::vector<IntMatrix> m_matrices;   // indexed by root_slot
  std::vector<std::pair<int, int>> m_pivot;  // first nonzero (row,col) per slot
};

// Process-wide cache of immutable bases, shared across threads.
std::shared_ptr<const ChevalleyBasis> get_chevalley(LieType t, int rank);

}  // namespace wdg
