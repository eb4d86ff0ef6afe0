#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "wdg/root_system.hpp"

using namespace wdg;

namespace {

long long expected_positive_count(LieType t, int n) {
  switch (t) {
    case LieType::A: return static_cast<long long>(n) * (n + 1) / 2;
    case LieType::B:
    case LieType::C: return static_cast<long long>(n) * n;
    case LieType::D: return static_cast<long long>(n) * (n - 1);
  }
  return 0;
}

// Independent enumeration of candidate vectors per the type's root patterns.
std::set<Root> brute_force_positive(LieType t, int n) {
  std::set<Root> out;
  const int dim = t == LieType::A ? n + 1 : n;
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j) out.insert(eps_minus(dim, i, j));
  if (t == LieType::B || t == LieType::C || t == LieType::D)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) out.insert(eps_plus(dim, i, j));
  if (t == LieType::B)
    for (int k = 1; k <= n; ++k) out.insert(eps_single(dim, k, 1));
  if (t == LieType::C)
    for (int k = 1; k <= n; ++k) out.insert(eps_single(dim, k, 2));
  return out;
}

}  // namespace

TEST_CASE("small systems match the listed positive roots") {
  auto c2 = build_root_system(LieType::C, 2);
  REQUIRE(c2.positive_roots.size() == 4);
  std::set<Root> got(c2.positive_roots.begin(), c2.positive_roots.end());
  std::set<Root> want = {eps_minus(2, 1, 2), eps_plus(2, 1, 2), eps_single(2, 1, 2),
                         eps_single(2, 2, 2)};
  CHECK(got == want);

  auto a1 = build_root_system(LieType::A, 1);
  REQUIRE(a1.positive_roots.size() == 1);
  CHECK(a1.positive_roots[0] == eps_minus(2, 1, 2));

  auto d4 = build_root_system(LieType::D, 4);
  CHECK(d4.positive_roots.size() == 12);
  std::set<Root> d4got(d4.positive_roots.begin(), d4.positive_roots.end());
  CHECK(d4got == brute_force_positive(LieType::D, 4));
}

TEST_CASE("counts and enumeration agree up to rank 8") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int n = min_rank(t); n <= 8; ++n) {
      auto sys = build_root_system(t, n);
      CHECK(static_cast<long long>(sys.positive_roots.size()) ==
            expected_positive_count(t, n));
      std::set<Root> got(sys.positive_roots.begin(), sys.positive_roots.end());
      CHECK(got == brute_force_positive(t, n));
      CHECK(sys.simple_roots.size() == static_cast<size_t>(n));
    }
}

TEST_CASE("invalid ranks are rejected") {
  CHECK_THROWS_AS(build_root_system(LieType::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(LieType::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(LieType::C, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(LieType::D, 2), std::invalid_argument);
}

TEST_CASE("multiplicity examples") {
  auto a2 = build_root_system(LieType::A, 2);
  CHECK(multiplicity(a2, eps_minus(3, 1, 3), 1) == 1);  // e1-e3 = a1+a2
  auto c2 = build_root_system(LieType::C, 2);
  CHECK(multiplicity(c2, eps_single(2, 1, 2), 2) == 1);  // 2e1 = 2a1+a2
  CHECK(multiplicity(c2, eps_single(2, 1, 2), 1) == 2);
  auto b2 = build_root_system(LieType::B, 2);
  CHECK(multiplicity(b2, eps_plus(2, 1, 2), 2) == 2);  // e1+e2 = a1+2a2
  CHECK(multiplicity(b2, eps_plus(2, 1, 2), 1) == 1);
  CHECK_THROWS_AS(multiplicity(a2, eps_plus(3, 1, 2), 1), std::invalid_argument);
}

TEST_CASE("expansion reconstructs every positive root; negation closure") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int n = min_rank(t); n <= 8; ++n) {
      auto sys = build_root_system(t, n);
      for (const Root& beta : sys.positive_roots) {
        Root acc{std::vector<int>(sys.dim(), 0)};
        for (int l = 1; l <= n; ++l) {
          int m = multiplicity(sys, beta, l);
          CHECK(m >= 0);
          for (int rep = 0; rep < m; ++rep) acc = acc + sys.simple_roots[l - 1];
        }
        CHECK(acc == beta);
        CHECK(multiplicity(sys, -beta, 1) == -multiplicity(sys, beta, 1));
        CHECK(sys.is_root(-beta));
        CHECK(sys.positive_index(-beta) == -1);
      }
    }
}
