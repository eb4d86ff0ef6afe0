#include "wdg/gf2k.hpp"

#include <stdexcept>

namespace wdg {

namespace {

using u128 = unsigned __int128;

int poly_degree(u128 p) {
  int d = -1;
  while (p) { ++d; p >>= 1; }
  return d;
}

u128 poly_mod(u128 a, u128 b) {
  const int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db; da = poly_degree(a))
    a ^= b << (da - db);
  return a;
}

u128 poly_gcd(u128 a, u128 b) {
  while (b) {
    u128 r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

// Multiplication in GF(2)[x]/(f) where f = x^k + low; valid for any f (used by
// the irreducibility test before the modulus is certified).
uint64_t modmul(int k, uint64_t low, uint64_t mask, uint64_t a, uint64_t b) {
  uint64_t res = 0;
  for (int i = k - 1; i >= 0; --i) {
    uint64_t top = (k == 64) ? (res >> 63) : ((res >> (k - 1)) & 1u);
    res = (res << 1) & mask;
    if (top) res ^= low;
    if ((b >> i) & 1u) res ^= a;
  }
  return res;
}

uint64_t mask_for(int k) { return k == 64 ? ~uint64_t(0) : ((uint64_t(1) << k) - 1); }

}  // namespace

bool Gf2Field::is_irreducible(int k, uint64_t low) {
  if ((low & 1u) == 0) return false;  // x divides f
  const uint64_t mask = mask_for(k);
  // x^(2^k) == x (mod f)
  uint64_t r = 2;  // the polynomial x
  for (int i = 0; i < k; ++i) r = modmul(k, low, mask, r, r);
  if (r != 2) return false;
  // gcd(x^(2^(k/p)) - x, f) == 1 for every prime p | k
  const u128 f = (u128(1) << k) | low;
  for (int p = 2; p <= k; ++p) {
    if (k % p != 0) continue;
    bool prime = true;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) { prime = false; break; }
    if (!prime) continue;
    uint64_t s = 2;
    for (int i = 0; i < k / p; ++i) s = modmul(k, low, mask, s, s);
    if (poly_gcd(u128(s ^ 2), f) != 1) return false;
  }
  return true;
}

Gf2Field::Gf2Field(int k) : m_k(k) {
  if (k < 2 || k > 64) throw std::invalid_argument("field exponent must be in [2,64]");
  m_mask = mask_for(k);
  // trinomials first
  for (int t = 1; t < k; ++t) {
    uint64_t low = (uint64_t(1) << t) | 1u;
    if (is_irreducible(k, low)) { m_low = low; return; }
  }
  // then pentanomials x^k + x^a + x^b + x^c + 1 with a > b > c >= 1
  for (int a = 3; a < k; ++a)
    for (int b = 2; b < a; ++b)
      for (int c = 1; c < b; ++c) {
        uint64_t low = (uint64_t(1) << a) | (uint64_t(1) << b) | (uint64_t(1) << c) | 1u;
        if (is_irreducible(k, low)) { m_low = low; return; }
      }
  throw std::logic_error("no low-weight irreducible found");  // never reached for k <= 64
}

uint64_t Gf2Field::mul(uint64_t a, uint64_t b) const {
  return modmul(m_k, m_low, m_mask, a, b);
}

uint64_t Gf2Field::pow(uint64_t a, uint64_t e) const {
  uint64_t res = 1;
  while (e) {
    if (e & 1u) res = mul(res, a);
    a = mul(a, a);
    e >>= 1;
  }
  return res;
}

uint64_t Gf2Field::inv(uint64_t a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  // a^(2^k - 2) via k-1 square-and-multiply steps
  uint64_t res = 1, sq = a;
  for (int i = 1; i < m_k; ++i) {
    sq = mul(sq, sq);
    res = mul(res, sq);
  }
  return res;
}

uint64_t gf2k_det(const Gf2Field& f, std::vector<uint64_t> a, int n) {
  uint64_t det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (a[static_cast<size_t>(r) * n + c]) { pivot = r; break; }
    if (pivot < 0) return 0;
    if (pivot != c)
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<size_t>(pivot) * n + j],
                  a[static_cast<size_t>(c) * n + j]);  // char 2: no sign change
    const uint64_t pv = a[static_cast<size_t>(c) * n + c];
    det = f.mul(det, pv);
    const uint64_t pinv = f.inv(pv);
    for (int r = c + 1; r < n; ++r) {
      const uint64_t factor = f.mul(a[static_cast<size_t>(r) * n + c], pinv);
      if (!factor) continue;
      for (int j = c; j < n; ++j)
        a[static_cast<size_t>(r) * n + j] ^=
            f.mul(factor, a[static_cast<size_t>(c) * n + j]);
    }
  }
  return det;
}

}  // namespace wdg
