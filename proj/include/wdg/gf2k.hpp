#pragma once

#include <cstdint>
#include <vector>

namespace wdg {

// GF(2^k) for 2 <= k <= 64, as polynomial residues modulo the first irreducible
// in the low-weight scan order (trinomials x^k+x^t+1 by ascending t, then
// pentanomials by ascending tap tuple).  The scan is deterministic, so runs are
// reproducible; irreducibility is established by the derandomized Rabin test.
class Gf2Field {
 public:
  explicit Gf2Field(int k);

  int degree() const { return m_k; }
  uint64_t modulus_low() const { return m_low; }  // f = x^k + (bits of m_low)

  uint64_t add(uint64_t a, uint64_t b) const { return a ^ b; }
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const;  // a != 0

  uint64_t mask() const { return m_mask; }

  // Deterministic irreducibility check over GF(2); low encodes the tail of
  // f = x^k + ... + 1.
  static bool is_irreducible(int k, uint64_t low);

 private:
  int m_k;
  uint64_t m_low;
  uint64_t m_mask;
};

// Determinant over GF(2^k) by Gaussian elimination; a is row-major n x n.
uint64_t gf2k_det(const Gf2Field& f, std::vector<uint64_t> a, int n);

}  // namespace wdg
