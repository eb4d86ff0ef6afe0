#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdg/gram.hpp"

namespace wdg {

// Type-A machinery: positive roots are written as intervals (a,b), meaning
// alpha_a + ... + alpha_b.  The right/left transformations are mutually
// inverse partial bijections on Phi_{d,1}; their maximal chains partition it.
struct OrbitClass {
  enum class Kind { Omega0, Omega1, Omega2 };

  std::pair<int, int> seed;        // interval of the chain start
  Kind kind = Kind::Omega0;
  std::vector<Root> r_orbit;       // full maximal chain in the R direction
  std::vector<Root> l_orbit;       // mirror chain from tau(seed), L direction
  std::optional<Root> link_root;   // Omega1 only: the weight-2 bridge
};

// Throws if the root has no image in Phi_{d,1} (root not in the X/Y domain).
Root right_transform(const GradedSystem& gs, const Root& r);
Root left_transform(const GradedSystem& gs, const Root& r);

// One class per chain/mirror-chain pair; Omega0 are the self-mirror chains,
// the rest are mirror pairs split by chain-length parity.  Lemma-style checks
// (unique even link index, partition of Phi_{d,1}) are asserted.
std::vector<OrbitClass> classify_orbits(const GradedSystem& gs);

struct ConstructedLambda {
  LambdaAssignment lambda;
  std::string method;
  bool used_fallback = false;
};

ConstructedLambda construct_type_A(const GradedSystem& gs);
ConstructedLambda construct_type_B(const GradedSystem& gs);
ConstructedLambda construct_type_C(const GradedSystem& gs);
ConstructedLambda construct_type_D(const GradedSystem& gs);
ConstructedLambda construct_lambda(const GradedSystem& gs);  // dispatch on type

// First {0,1}-assignment (lexicographic over the Gram-relevant variables in
// canonical Phi_{d,2} order, all others zero) whose integer determinant is
// +-1.  Throws when more than cap_vars variables are relevant.
std::optional<LambdaAssignment> search_unimodular_01(const GradedSystem& gs,
                                                     int cap_vars);

}  // namespace wdg
