#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wdg/chevalley.hpp"

using namespace wdg;

namespace {

// Largest r with beta - r*alpha a root: the independent root-string oracle for
// the coefficient magnitude.
int root_string_down(const RootSystem& sys, const Root& alpha, const Root& beta) {
  int r = 0;
  Root cur = beta;
  for (;;) {
    Root next = cur + (-alpha);
    if (next.is_zero() || !sys.is_root(next)) break;
    cur = next;
    ++r;
  }
  return r;
}

std::vector<Root> all_roots(const RootSystem& sys) {
  std::vector<Root> out = sys.positive_roots;
  for (const Root& r : sys.positive_roots) out.push_back(-r);
  return out;
}

}  // namespace

TEST_CASE("defining choices and spec examples") {
  auto a2 = get_chevalley(LieType::A, 2);
  const IntMatrix& e12 = a2->matrix_of(eps_minus(3, 1, 2));
  CHECK(e12.at(0, 1) == 1);  // elementary matrix E_12
  long long nonzero = 0;
  for (long long v : e12.a) nonzero += v != 0;
  CHECK(nonzero == 1);

  // (A2) [e_{e1-e2}, e_{e2-e3}] = +-1 * e_{e1-e3}
  auto br = a2->bracket(eps_minus(3, 1, 2), eps_minus(3, 2, 3));
  REQUIRE(br.sum_root.has_value());
  CHECK(*br.sum_root == eps_minus(3, 1, 3));
  CHECK((br.coefficient == 1 || br.coefficient == -1));

  // (A2) sum not a root
  auto zero = a2->bracket(eps_minus(3, 1, 2), eps_minus(3, 1, 3));
  CHECK(zero.coefficient == 0);
  CHECK(!zero.sum_root.has_value());

  // (C2) long-root pair with r = 1
  auto c2 = get_chevalley(LieType::C, 2);
  auto brc = c2->bracket(eps_minus(2, 1, 2), eps_plus(2, 1, 2));
  REQUIRE(brc.sum_root.has_value());
  CHECK(*brc.sum_root == eps_single(2, 1, 2));
  CHECK(std::abs(brc.coefficient) == 2);

  // (B2) short-short bracket
  auto b2 = get_chevalley(LieType::B, 2);
  auto brb = b2->bracket(eps_single(2, 1, 1), eps_single(2, 2, 1));
  REQUIRE(brb.sum_root.has_value());
  CHECK(*brb.sum_root == eps_plus(2, 1, 2));
  CHECK(std::abs(brb.coefficient) == 2);

  // (C3) mixed pair
  auto c3 = get_chevalley(LieType::C, 3);
  auto brm = c3->bracket(eps_minus(3, 1, 3), eps_plus(3, 2, 3));
  REQUIRE(brm.sum_root.has_value());
  CHECK(*brm.sum_root == eps_plus(3, 1, 2));
  CHECK(std::abs(brm.coefficient) == 1);

  CHECK_THROWS_AS(a2->bracket(eps_minus(3, 1, 2), eps_minus(3, 2, 1)),
                  std::invalid_argument);
}

TEST_CASE("root vectors have the right torus weights") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D}) {
    auto ch = get_chevalley(t, 4);
    const RootSystem& sys = ch->system();
    const int order = ch->matrix_of(sys.positive_roots[0]).n;
    // h = diag(1, 2, 3, 4 | -1, -2, -3, -4 | 0) in the B/C/D layouts, and
    // diag(1, ..., 5) for type A
    IntMatrix h(order);
    const int dim = sys.dim();
    for (int i = 0; i < dim; ++i) h.at(i, i) = i + 1;
    if (t != LieType::A)
      for (int i = 0; i < dim; ++i) h.at(dim + i, dim + i) = -(i + 1);
    for (const Root& r : all_roots(sys)) {
      long long w = 0;
      for (int i = 0; i < dim; ++i) w += static_cast<long long>(r.coords[i]) * (i + 1);
      IntMatrix lhs = commutator(h, ch->matrix_of(r));
      IntMatrix rhs = ch->matrix_of(r);
      for (auto& v : rhs.a) v *= w;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("antisymmetry and the magnitude rule |N| = r+1 up to rank 6") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int n = min_rank(t); n <= 6; ++n) {
      auto ch = get_chevalley(t, n);
      const RootSystem& sys = ch->system();
      auto roots = all_roots(sys);
      for (const Root& a : roots)
        for (const Root& b : roots) {
          if ((a + b).is_zero()) continue;
          auto ab = ch->bracket(a, b);
          auto ba = ch->bracket(b, a);
          CHECK(ab.coefficient == -ba.coefficient);
          if (sys.is_root(a + b)) {
            REQUIRE(ab.sum_root.has_value());
            CHECK(std::abs(ab.coefficient) == root_string_down(sys, a, b) + 1);
          } else {
            CHECK(ab.coefficient == 0);
          }
        }
    }
}

TEST_CASE("Jacobi identity on all basis triples at rank <= 5") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int n = min_rank(t); n <= 5; ++n) {
      auto ch = get_chevalley(t, n);
      auto roots = all_roots(ch->system());
      std::vector<const IntMatrix*> ms;
      for (const Root& r : roots) ms.push_back(&ch->matrix_of(r));
      for (size_t x = 0; x < ms.size(); ++x)
        for (size_t y = x + 1; y < ms.size(); ++y)
          for (size_t z = y + 1; z < ms.size(); ++z) {
            IntMatrix j1 = commutator(*ms[x], commutator(*ms[y], *ms[z]));
            IntMatrix j2 = commutator(*ms[y], commutator(*ms[z], *ms[x]));
            IntMatrix j3 = commutator(*ms[z], commutator(*ms[x], *ms[y]));
            bool ok = true;
            for (size_t i = 0; i < j1.a.size(); ++i)
              ok = ok && (j1.a[i] + j2.a[i] + j3.a[i] == 0);
            REQUIRE(ok);
          }
    }
}
