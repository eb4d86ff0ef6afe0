#pragma once

#include <gmpxx.h>

#include <vector>

#include "wdg/gram.hpp"

namespace wdg {

// Faithful-map machinery for odd diagrams of types B, C, D.  The window count
// L is k-2 in types B/C and the unforked D case, k-1 when the fork nodes carry
// weight 1 (there the block ladder runs one level further and the fork roots
// form the final block).
int faithful_window_count(const GradedSystem& gs);

// Y_{d,l} = {alpha in Phi_{d,1} | [alpha : alpha_{i_l}] = 1}, l in [1,k];
// l = k+1 returns the fork block for type D case 1.
std::vector<Root> y_set(const GradedSystem& gs, int l);

// Omega_l = difference roots eps_s - eps_t in Phi_{d,2} with
// t - s <= i_{l+1} - (i_{l-1}+1), for l in [1,L].
std::vector<Root> omega_window(const GradedSystem& gs, int l);

// lambda is faithful iff for every window l the weight-2 roots with
// multiplicity one at alpha_{i_l} and alpha_{i_{l+1}} and nonzero lambda lie
// in Omega_l.
bool is_faithful(const GradedSystem& gs, const LambdaAssignment& lam);

// Weighted-Lie-algebra isomorphisms acting on lambda.  Both preserve
// |det G_{d,lambda}| exactly: rho is the pullback along exp(gamma ad e_delta)
// with delta = eps_s - eps_t of extended weight 0, swap the pullback along the
// corresponding Weyl element.  The block index l is checked against s, t.
LambdaAssignment apply_rho(const GradedSystem& gs, const LambdaAssignment& lam,
                           int l, int s, int t, long long gamma);
LambdaAssignment apply_swap(const GradedSystem& gs, const LambdaAssignment& lam,
                            int l, int s, int t);

// Clears every offending lambda-value outside the Omega windows by column
// operations, smallest (s, t) first; output is faithful with the same |det|.
LambdaAssignment faithfulize(const GradedSystem& gs, const LambdaAssignment& lam);

struct PQPartition {
  std::vector<std::vector<Root>> q_sets;  // Q_1 .. Q_{L+1}
  std::vector<std::vector<Root>> p_sets;  // P_1 .. P_L
  std::vector<Root> final_block;          // rows/columns of the last square block
};

// Defined for L >= 0 (k >= 2); the count identity |P_l| = |Q_l| is asserted.
PQPartition pq_partition(const GradedSystem& gs);

struct Factorization {
  std::vector<mpz_class> block_dets;  // det of the (Q_l, P_l) pairing blocks
  mpz_class final_det;
  mpz_class full_det;
  bool identity_holds;  // full = +- (prod blocks)^2 * final
};

// Requires a faithful integer lambda.
Factorization factor_determinant(const GradedSystem& gs, const LambdaAssignment& lam);

}  // namespace wdg
