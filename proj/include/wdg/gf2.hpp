#pragma once

#include <cstdint>
#include <vector>

namespace wdg {

// Dense matrix over GF(2), rows packed into 64-bit words.
struct Gf2Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<uint64_t> data;  // rows * words_per_row

  Gf2Matrix() = default;
  Gf2Matrix(int r, int c)
      : rows(r), cols(c), data(static_cast<size_t>(r) * words_per_row(c), 0) {}

  static int words_per_row(int c) { return (c + 63) / 64; }
  int wpr() const { return words_per_row(cols); }

  bool get(int r, int c) const {
    return (data[static_cast<size_t>(r) * wpr() + c / 64] >> (c % 64)) & 1u;
  }
  void set(int r, int c, bool v) {
    uint64_t& w = data[static_cast<size_t>(r) * wpr() + c / 64];
    uint64_t bit = uint64_t(1) << (c % 64);
    if (v) w |= bit; else w &= ~bit;
  }
  void flip(int r, int c) {
    data[static_cast<size_t>(r) * wpr() + c / 64] ^= uint64_t(1) << (c % 64);
  }
};

// Rank by Gaussian elimination (destroys a copy).
int gf2_rank(Gf2Matrix m);

// Determinant of a square matrix: 1 iff full rank.
bool gf2_det(const Gf2Matrix& m);

inline int gf2_kernel_dimension(const Gf2Matrix& m) { return m.cols - gf2_rank(m); }

}  // namespace wdg
