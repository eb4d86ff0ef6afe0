#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace wdg {

enum class LieType : char { A = 'A', B = 'B', C = 'C', D = 'D' };

char to_char(LieType t);
LieType lie_type_from_char(char c);

// Smallest rank for which the type names a simple root system.
int min_rank(LieType t);

// A root in epsilon-coordinates: length rank+1 for type A, rank otherwise.
struct Root {
  std::vector<int> coords;

  Root() = default;
  explicit Root(std::vector<int> c) : coords(std::move(c)) {}

  bool operator==(const Root&) const = default;
  auto operator<=>(const Root&) const = default;

  Root operator+(const Root& o) const;
  Root operator-() const;
  bool is_zero() const;
};

// Convenience builders (1-based indices).
Root eps_minus(int dim, int i, int j);          // e_i - e_j
Root eps_plus(int dim, int i, int j);           // e_i + e_j
Root eps_single(int dim, int i, int scale);     // scale * e_i

struct RootSystem {
  LieType lie_type;
  int rank = 0;
  std::vector<Root> simple_roots;
  std::vector<Root> positive_roots;  // fixed canonical order, see build_root_system
  // multiplicities[p][l] = [beta_p : alpha_{l+1}] for the p-th positive root
  std::vector<std::vector<int>> multiplicities;

  int dim() const { return static_cast<int>(simple_roots.front().coords.size()); }

  // Index into positive_roots, or -1.
  int positive_index(const Root& r) const;
  // True iff r or -r is a positive root.
  bool is_root(const Root& r) const;

 private:
  friend RootSystem build_root_system(LieType, int);
  std::map<Root, int> m_positive_index;
};

// Builds the root system in the canonical order: differences e_i - e_j (i < j,
// lexicographic), then sums e_i + e_j (i < j), then the rank-many short/long
// singles (type B: e_k, type C: 2e_k).  Only the determinant sign of downstream
// Gram matrices depends on this order.
RootSystem build_root_system(LieType t, int n);

// [beta : alpha_i] with 1-based simple_index; negative roots give negated
// coefficients.  Throws if beta is not a root of the system.
int multiplicity(const RootSystem& sys, const Root& beta, int simple_index);

}  // namespace wdg
