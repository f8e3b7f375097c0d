#include "toricnash/linalg.hpp"

#include <algorithm>

namespace toricnash {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d <= p / d; d += 2)
    if (p % d == 0) return false;
  return true;
}

Characteristic::Characteristic(std::int64_t p) : p_(p) {
  if (p != 0 && !is_prime(p))
    throw std::invalid_argument("characteristic must be 0 or a prime, got " + std::to_string(p));
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  const std::size_t m = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < m; ++c) {
    // Euclid on column c over rows r..m-1 until a single nonzero remains.
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h(i, c).is_zero()) continue;
        if (best == m || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == m) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c).is_zero()) continue;
        Integer q = floor_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (!h(i, c).is_zero()) done = false;
      }
      if (done) break;
    }
    if (h(r, c).is_zero()) continue;
    if (h(r, c).sign() < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      if (q.is_zero()) continue;
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

IntMatrix hnf(const IntMatrix& a) { return hermite_normal_form(a).hnf; }

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t i = k + 1;
      while (i < n && m(i, k).is_zero()) ++i;
      if (i == n) return Integer(0);
      m.swap_rows(k, i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

SmithForm smith_normal_form(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix left = IntMatrix::identity(a.rows());
  IntMatrix right = IntMatrix::identity(a.cols());
  const std::size_t rows = d.rows(), cols = d.cols();
  std::vector<Integer> factors;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j).is_zero()) continue;
          if (bi == rows || abs(d(i, j)) < abs(d(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == rows) break;
      d.swap_rows(t, bi);
      left.swap_rows(t, bi);
      d.swap_columns(t, bj);
      right.swap_columns(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t).is_zero()) continue;
        Integer q = floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        left.add_row_multiple(i, t, -q);
        if (!d(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j).is_zero()) continue;
        Integer q = floor_div(d(t, j), d(t, t));
        d.add_column_multiple(j, t, -q);
        right.add_column_multiple(j, t, -q);
        if (!d(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      // Pivot isolated; enforce divisibility of the trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!floor_mod(d(i, j), abs(d(t, t))).is_zero()) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      d.add_row_multiple(t, bad, Integer(1));
      left.add_row_multiple(t, bad, Integer(1));
    }
    if (d(t, t).is_zero()) break;
    if (d(t, t).sign() < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
    factors.push_back(d(t, t));
  }
  return {std::move(factors), std::move(left), std::move(right)};
}

std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      Integer g = gcd(m(i, c), m(r, c));
      Integer fi = exact_div(m(r, c), g), fr = exact_div(m(i, c), g);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = fi * m(i, j) - fr * m(r, j);
      // keep rows primitive so entries stay small
      Integer rg = 0;
      for (std::size_t j = c; j < m.cols(); ++j) rg = gcd(rg, m(i, j));
      if (!rg.is_zero() && !rg.is_one())
        for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = exact_div(m(i, j), rg);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(IntMatrix::from_rows(vectors));
}

void make_primitive_in_place(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    g = gcd(g, x);
    if (g.is_one()) return;
  }
  if (g.is_zero() || g.is_one()) return;
  for (auto& x : v) x = exact_div(x, g);
}

IntVector make_primitive(IntVector v) {
  if (is_zero_vector(v)) throw std::invalid_argument("cannot make the zero vector primitive");
  make_primitive_in_place(v);
  return v;
}

Integer lattice_index(const IntMatrix& a) {
  IntMatrix h = hnf(a.transpose());
  Integer index = 1;
  std::size_t c = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (r >= h.rows()) throw std::invalid_argument("lattice_index: rank-deficient input");
    while (c < h.cols() && h(r, c).is_zero()) ++c;
    if (c == h.cols()) throw std::invalid_argument("lattice_index: rank-deficient input");
    index *= h(r, c);
  }
  return index;
}

bool is_basis_modulo(const std::vector<IntVector>& columns, Characteristic p) {
  if (columns.empty()) throw std::invalid_argument("is_basis_modulo: no vectors");
  const std::size_t n = columns.front().size();
  if (columns.size() != n) throw std::invalid_argument("is_basis_modulo: need exactly n vectors in Z^n");
  Integer det = determinant(IntMatrix::from_columns(columns, n));
  if (p.is_zero()) return !det.is_zero();
  return !floor_mod(det, Integer(p.value())).is_zero();
}

std::optional<IntVector> solve_integer_system(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer_system: shape mismatch");
  // U A^T = H  =>  with x = U^T y, A x = H^T y.
  HermiteForm hf = hermite_normal_form(a.transpose());
  const IntMatrix& h = hf.hnf;  // n x k
  const std::size_t n = a.cols();
  IntVector y(n);
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (c < h.cols() && h(i, c).is_zero()) ++c;
    if (c == h.cols()) break;  // remaining rows of H are zero; y_i stays 0
    Integer rhs = b[c];
    for (std::size_t j = 0; j < i; ++j) rhs -= h(j, c) * y[j];
    if (!floor_mod(rhs, h(i, c)).is_zero()) return std::nullopt;
    y[i] = exact_div(rhs, h(i, c));
  }
  IntVector x = hf.transform.transpose() * y;
  if (a * x != b) return std::nullopt;
  return x;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  HermiteForm hf = hermite_normal_form(u);
  if (hf.hnf != IntMatrix::identity(u.rows())) throw std::invalid_argument("matrix is not unimodular");
  return hf.transform;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  HermiteForm hf = hermite_normal_form(a.transpose());
  std::vector<IntVector> basis;
  for (std::size_t r = 0; r < hf.hnf.rows(); ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < hf.hnf.cols() && zero; ++c) zero = hf.hnf(r, c).is_zero();
    if (zero) basis.push_back(hf.transform.row(r));
  }
  return basis;
}

}  // namespace toricnash
