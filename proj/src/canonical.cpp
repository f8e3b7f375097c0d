#include "toricnash/canonical.hpp"

#include "toricnash/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace toricnash {

namespace {

// A column prefix together with the transform bringing it to Hermite form.
struct Prefix {
  std::vector<std::size_t> order;
  std::vector<bool> used;
  IntMatrix u;
  std::size_t rank = 0;
  std::vector<IntVector> columns;  // Hermite form of the prefix
};

// Appends column a, updating U so that U * prefix stays in Hermite form.
void append_column(Prefix& p, const IntVector& a) {
  const std::size_t n = p.u.rows();
  IntVector c = p.u * a;
  std::size_t r = p.rank;
  bool pivot = false;
  for (std::size_t i = r; i < n && !pivot; ++i) pivot = !c[i].is_zero();
  if (pivot) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i)
        if (!c[i].is_zero() && (best == n || abs(c[i]) < abs(c[best]))) best = i;
      if (best != r) {
        std::swap(c[best], c[r]);
        p.u.swap_rows(best, r);
      }
      bool done = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (c[i].is_zero()) continue;
        Integer q = floor_div(c[i], c[r]);
        c[i] -= q * c[r];
        p.u.add_row_multiple(i, r, -q);
        if (!c[i].is_zero()) done = false;
      }
      if (done) break;
    }
    if (c[r].sign() < 0) {
      c[r] = -c[r];
      p.u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(c[i], c[r]);
      if (q.is_zero()) continue;
      c[i] -= q * c[r];
      p.u.add_row_multiple(i, r, -q);
    }
    ++p.rank;
  }
  p.columns.push_back(std::move(c));
}

bool column_greater(const IntVector& a, const IntVector& b) { return b < a; }

IntMatrix to_matrix(const std::vector<IntVector>& columns, std::size_t n) { return IntMatrix::from_columns(columns, n); }

// Row-major comparison of two prefixes of equal length on row 0.
std::strong_ordering compare_row0(const std::vector<IntVector>& a, const std::vector<IntVector>& b, std::size_t len) {
  for (std::size_t j = 0; j < len; ++j)
    if (auto c = a[j][0] <=> b[j][0]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace

std::string CanonicalKey::serialize() const {
  std::string s = std::to_string(matrix.rows()) + " x " + std::to_string(matrix.cols()) + ":";
  for (std::size_t i = 0; i < matrix.entries().size(); ++i) {
    s += i ? "," : " ";
    s += matrix.entries()[i].to_string();
  }
  return s;
}

CanonicalKey CanonicalKey::parse(std::string_view text) {
  auto fail = [&]() { throw std::invalid_argument("malformed canonical key: " + std::string(text)); };
  auto colon = text.find(':');
  if (colon == std::string_view::npos) fail();
  std::string head(text.substr(0, colon));
  std::size_t rows = 0, cols = 0;
  char x = 0;
  std::istringstream hs(head);
  if (!(hs >> rows >> x >> cols) || x != 'x' || rows == 0 || cols == 0) fail();
  std::string rest(text.substr(colon + 1));
  if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
  IntMatrix m(rows, cols);
  std::size_t i = 0, start = 0;
  for (;;) {
    std::size_t end = rest.find(',', start);
    std::string token = rest.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (token.empty() || i >= rows * cols) fail();
    try {
      m(i / cols, i % cols) = Integer(token);
    } catch (const std::exception&) {
      fail();
    }
    ++i;
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (i != rows * cols) fail();
  return {m};
}

CanonicalKey unimodular_key(std::size_t n) { return {IntMatrix::identity(n)}; }

bool colex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

CanonicalCone canonical_cone(const Cone& c) {
  if (!c.is_pointed() || !c.is_full_dimensional())
    throw std::invalid_argument("canonical form needs a pointed full-dimensional cone");
  const std::size_t n = c.ambient_rank();
  const auto& rays = c.rays();
  const std::size_t k = rays.size();

  std::vector<IntVector> best;
  std::vector<IntMatrix> best_transforms;
  auto offer = [&](std::vector<IntVector> full, const IntMatrix& u) {
    // Row-major comparison of full matrices.
    std::strong_ordering cmp = std::strong_ordering::greater;
    if (!best.empty()) {
      cmp = std::strong_ordering::equal;
      for (std::size_t r = 0; r < n && cmp == 0; ++r)
        for (std::size_t j = 0; j < k && cmp == 0; ++j) cmp = full[j][r] <=> best[j][r];
    }
    if (cmp > 0) {
      best = std::move(full);
      best_transforms = {u};
    } else if (cmp == 0) {
      best_transforms.push_back(u);
    }
  };

  Prefix root;
  root.used.assign(k, false);
  root.u = IntMatrix::identity(n);
  std::vector<Prefix> level{root};
  for (std::size_t len = 1; len <= k && !level.empty(); ++len) {
    std::vector<Prefix> next;
    for (const auto& p : level)
      for (std::size_t j = 0; j < k; ++j) {
        if (p.used[j]) continue;
        Prefix q = p;
        q.used[j] = true;
        q.order.push_back(j);
        append_column(q, rays[j]);
        next.push_back(std::move(q));
      }
    // Only prefixes with the greatest row-0 entry can lead to the optimum;
    // all survivors of the previous level share the earlier row-0 entries.
    Integer top = next.front().columns.back()[0];
    for (const auto& q : next) top = std::max(top, q.columns.back()[0]);
    level.clear();
    for (auto& q : next) {
      if (q.columns.back()[0] != top) continue;
      if (!best.empty() && compare_row0(q.columns, best, len) < 0) continue;
      if (q.rank < n) {
        level.push_back(std::move(q));
        continue;
      }
      // Full rank: U is fixed, and the best completion lists the remaining
      // columns in decreasing lexicographic order.
      std::vector<IntVector> rest;
      for (std::size_t j = 0; j < k; ++j)
        if (!q.used[j]) rest.push_back(q.u * rays[j]);
      std::sort(rest.begin(), rest.end(), column_greater);
      std::vector<IntVector> full = q.columns;
      full.insert(full.end(), rest.begin(), rest.end());
      offer(std::move(full), q.u);
    }
  }

  std::sort(best_transforms.begin(), best_transforms.end());
  best_transforms.erase(std::unique(best_transforms.begin(), best_transforms.end()), best_transforms.end());
  CanonicalCone out{{to_matrix(best, n)}, best_transforms.front(), best_transforms};
  return out;
}

CanonicalKey canonical_semigroup(const AffineSemigroup& s) {
  CanonicalCone hull = canonical_cone(s.hull());
  const std::size_t n = s.ambient_rank();
  IntMatrix least;
  for (const auto& u : hull.all_transforms) {
    std::vector<IntVector> image;
    for (const auto& h : s.hilbert_basis()) image.push_back(u * h);
    std::sort(image.begin(), image.end(), colex_less);
    IntMatrix m = IntMatrix::from_columns(image, n);
    if (least.empty() || m < least) least = std::move(m);
  }
  return {least};
}

bool are_equivalent(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("cones of different rank");
  if (a.rays().size() != b.rays().size() || a.facets().size() != b.facets().size()) return false;
  return canonical_cone(a).key == canonical_cone(b).key;
}

bool are_equivalent(const AffineSemigroup& a, const AffineSemigroup& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("semigroups of different rank");
  if (a.hilbert_basis().size() != b.hilbert_basis().size()) return false;
  return canonical_semigroup(a) == canonical_semigroup(b);
}

}  // namespace toricnash
