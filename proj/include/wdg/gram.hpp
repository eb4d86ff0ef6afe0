#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "wdg/chevalley.hpp"
#include "wdg/diagrams.hpp"
#include "wdg/gf2.hpp"
#include "wdg/gf2k.hpp"
#include "wdg/root_system.hpp"

namespace wdg {

struct CoefficientRing {
  enum class Kind { Integers, GF2, GF2k } kind = Kind::Integers;
  int k = 0;  // field exponent for GF2k, in [2,64]

  static CoefficientRing integers() { return {Kind::Integers, 0}; }
  static CoefficientRing gf2() { return {Kind::GF2, 0}; }
  static CoefficientRing gf2k(int k);
  bool operator==(const CoefficientRing&) const = default;
};

std::string to_string(const CoefficientRing& r);
CoefficientRing ring_from_string(const std::string& s);

// Map Phi_{d,2} -> R; absent roots carry 0.  Over Z the value is the integer
// itself; over GF2 it is 0/1; over GF(2^k) the bit pattern of the field element.
struct LambdaAssignment {
  CoefficientRing ring;
  std::map<Root, long long> values;

  long long value_of(const Root& r) const {
    auto it = values.find(r);
    return it == values.end() ? 0 : it->second;
  }
};

// A weighted diagram together with its root system, Chevalley basis and graded
// root lists; immutable, cheap to copy (shares the basis).
class GradedSystem {
 public:
  explicit GradedSystem(WeightedDiagram d);

  const WeightedDiagram& diagram() const { return m_diagram; }
  const RootSystem& system() const { return m_basis->system(); }
  const ChevalleyBasis& basis() const { return *m_basis; }
  const std::vector<Root>& phi1() const { return m_phi1; }
  const std::vector<Root>& phi2() const { return m_phi2; }
  int phi2_index(const Root& r) const;  // -1 if absent
  int weight_of(const Root& r) const;

 private:
  WeightedDiagram m_diagram;
  std::shared_ptr<const ChevalleyBasis> m_basis;
  std::vector<Root> m_phi1, m_phi2;
  std::map<Root, int> m_phi2_index;
};

// Ring-independent skeleton of the Gram matrix: entry (i,j), i<j, is
// coeff * lambda(phi2[var]) whenever beta_i + beta_j is a root.
struct GramStructure {
  int order = 0;
  struct Entry {
    int i, j, var;
    long long coeff;
  };
  std::vector<Entry> entries;
  std::vector<char> var_used;  // over phi2: referenced by at least one entry

  int used_count() const;
};

GramStructure gram_structure(const GradedSystem& gs);

// Gram matrix over a concrete ring.
template <typename Elem>
struct GramMatrix {
  std::vector<Root> order;
  CoefficientRing ring;
  std::vector<Elem> entries;  // order x order, row-major

  int n() const { return static_cast<int>(order.size()); }
  Elem at(int i, int j) const { return entries[static_cast<size_t>(i) * n() + j]; }
};

// Throws if lam has support outside Phi_{d,2} or targets another ring.
GramMatrix<long long> build_gram_z(const GradedSystem& gs, const LambdaAssignment& lam);
Gf2Matrix build_gram_gf2(const GradedSystem& gs, const LambdaAssignment& lam);
GramMatrix<uint64_t> build_gram_gf2k(const GradedSystem& gs, const LambdaAssignment& lam,
                                     const Gf2Field& field);

// Fraction-free (Bareiss) elimination over exact integers; empty matrix -> 1.
mpz_class det_exact(const GramMatrix<long long>& g);
mpz_class bareiss_det(std::vector<mpz_class> a, int n);

bool det_gf2(const Gf2Matrix& g);
uint64_t det_gf2k(const Gf2Field& field, const GramMatrix<uint64_t>& g);

// det in {+1,-1}; vacuously true when Phi_{d,1} is empty.
bool is_unimodular(const GradedSystem& gs, const LambdaAssignment& lam);

}  // namespace wdg
