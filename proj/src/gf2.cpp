#include "wdg/gf2.hpp"

namespace wdg {

int gf2_rank(Gf2Matrix m) {
  const int wpr = m.wpr();
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    const int word = c / 64;
    const uint64_t bit = uint64_t(1) << (c % 64);
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.data[static_cast<size_t>(r) * wpr + word] & bit) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int w = 0; w < wpr; ++w)
        std::swap(m.data[static_cast<size_t>(pivot) * wpr + w],
                  m.data[static_cast<size_t>(rank) * wpr + w]);
    for (int r = rank + 1; r < m.rows; ++r)
      if (m.data[static_cast<size_t>(r) * wpr + word] & bit)
        for (int w = word; w < wpr; ++w)
          m.data[static_cast<size_t>(r) * wpr + w] ^=
              m.data[static_cast<size_t>(rank) * wpr + w];
    ++rank;
  }
  return rank;
}

bool gf2_det(const Gf2Matrix& m) {
  return m.rows == m.cols && gf2_rank(m) == m.rows;
}

}  // namespace wdg
