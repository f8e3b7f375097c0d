#include "toricnash/linalg.hpp"
#include "toricnash/semigroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace toricnash {

namespace {

// Normal of the hyperplane through n-1 independent vectors, oriented to be
// positive on `inside`.
IntVector oriented_normal(const std::vector<IntVector>& spanning, const IntVector& inside) {
  std::vector<IntVector> kernel = integer_kernel(IntMatrix::from_rows(spanning));
  if (kernel.size() != 1) throw std::logic_error("degenerate facet in triangulation");
  IntVector normal = make_primitive(kernel.front());
  if (dot(normal, inside).sign() < 0) normal = scaled(normal, Integer(-1));
  return normal;
}

IntMatrix adjugate(const IntMatrix& a) {
  const std::size_t n = a.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      Integer d = determinant(minor);
      adj(j, i) = (i + j) % 2 ? -d : d;
    }
  return adj;
}

}  // namespace

std::vector<std::vector<std::size_t>> placing_triangulation(const Cone& c) {
  if (!c.is_pointed() || !c.is_full_dimensional())
    throw std::invalid_argument("triangulation needs a pointed full-dimensional cone");
  const auto& rays = c.rays();
  const std::size_t n = c.ambient_rank();

  std::vector<std::size_t> first;
  std::vector<IntVector> chosen;
  std::vector<bool> placed(rays.size(), false);
  for (std::size_t i = 0; i < rays.size() && first.size() < n; ++i) {
    chosen.push_back(rays[i]);
    if (rank(chosen) == chosen.size()) {
      first.push_back(i);
      placed[i] = true;
    } else {
      chosen.pop_back();
    }
  }
  std::vector<std::vector<std::size_t>> simplices{first};
  if (n == 1) return simplices;

  for (std::size_t r = 0; r < rays.size(); ++r) {
    if (placed[r]) continue;
    // facet (sorted n-1 indices) -> (occurrences, opposite ray)
    std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> facets;
    for (const auto& s : simplices)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<std::size_t> f;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != drop) f.push_back(s[k]);
        auto [it, inserted] = facets.try_emplace(f, 0, s[drop]);
        ++it->second.first;
      }
    std::vector<std::vector<std::size_t>> added;
    for (const auto& [f, info] : facets) {
      if (info.first != 1) continue;
      std::vector<IntVector> span;
      for (std::size_t k : f) span.push_back(rays[k]);
      IntVector normal = oriented_normal(span, rays[info.second]);
      if (dot(normal, rays[r]).sign() < 0) {
        std::vector<std::size_t> s = f;
        s.push_back(r);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
    placed[r] = true;
  }
  std::sort(simplices.begin(), simplices.end());
  return simplices;
}

std::vector<IntVector> parallelepiped_points(const IntMatrix& v) {
  const std::size_t n = v.rows();
  if (v.cols() != n) throw std::invalid_argument("parallelepiped needs a square matrix");
  Integer det = determinant(v);
  if (det.is_zero()) throw std::invalid_argument("parallelepiped of dependent vectors");
  if (abs(det).is_one()) return {IntVector(n)};

  SmithForm snf = smith_normal_form(v);
  IntMatrix left_inv = unimodular_inverse(snf.left);
  IntMatrix adj = adjugate(v);
  if (det.sign() < 0) {
    det = -det;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) adj(i, j) = -adj(i, j);
  }

  std::vector<IntVector> out;
  std::vector<std::int64_t> bound(n);
  for (std::size_t i = 0; i < n; ++i) bound[i] = snf.invariant_factors[i].to_int64();
  std::vector<std::int64_t> y(n, 0);
  for (;;) {
    IntVector yv(y.begin(), y.end());
    IntVector x = left_inv * yv;
    IntVector coeff = adj * x;
    for (auto& a : coeff) a = floor_mod(a, det);
    IntVector p = v * coeff;
    for (auto& e : p) e = exact_div(e, det);
    out.push_back(std::move(p));

    std::size_t k = 0;
    while (k < n && ++y[k] == bound[k]) y[k++] = 0;
    if (k == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> hilbert_basis(const Cone& c) {
  if (!c.is_pointed() || !c.is_full_dimensional())
    throw std::invalid_argument("Hilbert basis needs a pointed full-dimensional cone");
  const std::size_t n = c.ambient_rank();
  const auto& rays = c.rays();

  std::unordered_set<IntVector, IntVectorHash> seen(rays.begin(), rays.end());
  std::vector<IntVector> candidates(rays.begin(), rays.end());
  for (const auto& s : placing_triangulation(c)) {
    std::vector<IntVector> cols;
    for (std::size_t k : s) cols.push_back(rays[k]);
    for (auto& p : parallelepiped_points(IntMatrix::from_columns(cols, n)))
      if (!is_zero_vector(p) && seen.insert(p).second) candidates.push_back(std::move(p));
  }

  // In a saturated cone x is reducible iff x - y lies in C for some smaller
  // irreducible y, i.e. every facet value of x dominates that of y.
  const auto& facets = c.facets();
  struct Entry {
    Integer grade;
    std::vector<Integer> eval;
    const IntVector* point;
  };
  std::vector<Entry> entries;
  entries.reserve(candidates.size());
  for (const auto& x : candidates) {
    Entry e{Integer(0), {}, &x};
    for (const auto& f : facets) {
      e.eval.push_back(dot(f, x));
      e.grade += e.eval.back();
    }
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.grade != b.grade) return a.grade < b.grade;
    return *a.point < *b.point;
  });

  std::vector<const Entry*> kept;
  for (const auto& e : entries) {
    bool reducible = false;
    for (const Entry* y : kept) {
      if (y->grade == e.grade) break;
      bool ge = true;
      for (std::size_t k = 0; k < e.eval.size() && ge; ++k) ge = e.eval[k] >= y->eval[k];
      if (ge) {
        reducible = true;
        break;
      }
    }
    if (!reducible) kept.push_back(&e);
  }
  std::vector<IntVector> out;
  out.reserve(kept.size());
  for (const Entry* e : kept) out.push_back(*e->point);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace toricnash
