#pragma once

// Matrices used across the test suites. Columns are generators.

#include "toricnash/int_matrix.hpp"

namespace fixtures {

using toricnash::IntMatrix;

inline IntMatrix six_ray_cone() {
  return IntMatrix::from_rows({{-2, -1, 5, 0, 0, 5}, {5, 3, 4, -1, 1, 1}, {1, 2, -1, 1, 4, -2}, {2, -1, 1, 2, 0, -2}});
}

inline IntMatrix six_ray_cone_hnf() {
  return IntMatrix::from_rows({{1, 0, 5, 3, 4, 1}, {0, 1, 9, 4, 8, 4}, {0, 0, 24, 2, 5, 17}, {0, 0, 0, 8, 11, -6}});
}

inline IntMatrix six_ray_cone_inequalities() {
  return IntMatrix::from_rows({{15, 8, -2, 5},
                               {15, 5, 1, 2},
                               {2, 4, -1, 8},
                               {41, -11, 57, 40},
                               {-2, 40, -10, 25},
                               {9, 5, 45, -20},
                               {3, 1, 13, -6},
                               {5, 1, 21, -8}});
}

/// The four-dimensional cone that is a child of itself.
inline IntMatrix loop_cone_b() {
  return IntMatrix::from_rows({{1, 0, 0, 0, 2, 1}, {0, 1, 0, 0, 3, 3}, {0, 0, 1, 0, -2, -1}, {0, 0, 0, 1, -1, -1}});
}

inline IntMatrix hypersurface_a1() {
  return IntMatrix::from_rows({{1, 0, 0, 0, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, -15}, {0, 0, 0, 1, -5}});
}

inline IntMatrix cyclic_quotient_a2() {
  return IntMatrix::from_rows({{1, 2, 0, 4}, {0, 3, 0, 0}, {0, 0, 1, 3}, {0, 0, 0, 12}});
}

inline IntMatrix gorenstein_a3() {
  return IntMatrix::from_rows({{1, 0, 0, 9}, {0, 1, 0, 10}, {0, 0, 1, 11}, {0, 0, 0, 12}});
}

inline IntMatrix nash_two_cycle() {
  return IntMatrix::from_rows({{1, 0, 0, -2, 1, 2}, {0, 1, 0, -1, -1, -2}, {0, 0, 1, 2, 1, 1}});
}

inline IntMatrix nash_two_cycle_seed() {
  return IntMatrix::from_rows({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, -6}});
}

inline IntMatrix five_dim_loop() {
  return IntMatrix::from_rows({{1, 0, 0, 0, 0, 2, 1, 1},
                               {0, 1, 0, 0, 0, 2, 2, 2},
                               {0, 0, 1, 0, 0, -1, -1, 0},
                               {0, 0, 0, 1, 0, 1, 1, 0},
                               {0, 0, 0, 0, 1, -2, -1, -1}});
}

inline IntMatrix reeves_matrix(std::size_t n, long long j) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, i) = 1;
    m(i, n - 1) = 1;
  }
  m(n - 1, n - 1) = j;
  return m;
}

}  // namespace fixtures
