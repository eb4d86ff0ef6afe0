#pragma once

#include <string>
#include <vector>

#include "wdg/root_system.hpp"

namespace wdg {

enum class DVariant { none, plus, minus };

std::string to_string(DVariant v);
DVariant dvariant_from_string(const std::string& s);

// Partition (type A) or bipartition (B/C/D) labelling a weighted Dynkin diagram.
struct PartitionInput {
  LieType lie_type = LieType::A;
  int rank = 0;
  std::vector<int> mu;        // weakly decreasing, positive
  std::vector<int> nu;        // type-dependent structure, positive
  DVariant variant = DVariant::none;  // only for very-even type D inputs

  std::string id() const;    // canonical "C5 mu=2,1 nu=2" key, stable sort order
  bool operator==(const PartitionInput&) const = default;
  auto operator<=>(const PartitionInput&) const = default;
};

// Throws std::invalid_argument naming the violated constraint.
void validate(const PartitionInput& in);

// Elementary divisors (ascending) together with the type family they live in.
struct DivisorSequence {
  LieType lie_type = LieType::A;
  std::vector<int> divisors;

  long long total() const;
  bool operator==(const DivisorSequence&) const = default;
};

DivisorSequence divisors_from_input(const PartitionInput& in);
// Inverse of divisors_from_input: splits a divisor multiset back into (mu, nu).
PartitionInput input_from_divisors(const DivisorSequence& seq, DVariant variant);

// Multiset union of {m-1, m-3, ..., 1-m} over all divisors, sorted descending.
std::vector<int> xi_sequence(const DivisorSequence& seq);

struct WeightedDiagram {
  LieType lie_type = LieType::A;
  int rank = 0;
  std::vector<int> weights;   // over simple roots, values in {0,1,2}
  PartitionInput source;

  bool operator==(const WeightedDiagram&) const = default;
};

WeightedDiagram diagram_from_input(const PartitionInput& in);
// Rank is derived from the divisor total; works for the degenerate low ranks
// that show up mid-reduction.
WeightedDiagram diagram_from_divisors(const DivisorSequence& seq,
                                      DVariant variant = DVariant::none);

bool is_odd(const WeightedDiagram& d);   // max simple weight == 1
bool is_zero(const WeightedDiagram& d);  // all weights 0

// d(beta) = sum of weights times simple-root multiplicities.
int extended_weight(const WeightedDiagram& d, const RootSystem& sys, const Root& beta);

// All roots of extended weight i (for i >= 1 these are positive), canonical order.
std::vector<Root> phi_d(const WeightedDiagram& d, const RootSystem& sys, int i);

// One step of the divisor reduction: the largest divisor value r is replaced by
// t = r - 2*floor((r-s)/2) where s is the largest smaller value present.  With a
// single distinct value the sequence collapses to a zero diagram directly.
DivisorSequence reduce_step(const DivisorSequence& seq);

struct ReductionTrace {
  std::vector<DivisorSequence> steps;  // starts with the input, ends odd or zero
  const DivisorSequence& result() const { return steps.back(); }
};
ReductionTrace reduce_to_odd(const DivisorSequence& seq);

// The per-type parity conditions on the elementary divisors; type A is always
// special.  Works for non-odd sequences too.
bool is_special(const DivisorSequence& seq);
bool is_special(const PartitionInput& in);

// Inverse of diagram_from_divisors: recover the divisor multiset from the
// weights alone.
DivisorSequence divisors_from_diagram(const WeightedDiagram& d);

// Identification of an odd diagram with its sequence of weight-1 node indices.
struct OddSequence {
  enum class DCase { none, case1, case2 };

  std::vector<int> marks;   // i_1 < ... < i_k (type D case1: fork nodes excluded)
  std::vector<int> gaps;    // s_1 = i_1, s_l = i_l - i_{l-1}
  DCase d_case = DCase::none;
  bool excluded_family = false;     // type D partition 2^{2m}1^2 (fork-only marks)
  std::vector<int> symmetric;       // type A only: (i_r=0, ..., i'_r=n+1)

  int k() const { return static_cast<int>(marks.size()); }
  int gap(int l) const { return l <= 0 ? 0 : gaps[l - 1]; }  // s_l with s_{<=0} = 0
};

OddSequence odd_sequence(const WeightedDiagram& d);

// All valid PartitionInputs for the type/rank, both variants for very-even D
// inputs, deterministic order, no duplicates.
std::vector<PartitionInput> enumerate_inputs(LieType t, int rank);

}  // namespace wdg
