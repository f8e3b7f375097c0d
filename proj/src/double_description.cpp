#include "toricnash/double_description.hpp"

#include "toricnash/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace toricnash {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  IntVector v;
  Bits zeros;  // processed constraints tight on v
};

std::size_t support_size(const IntVector& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Integer& x) { return !x.is_zero(); }));
}

std::vector<IntVector> prepare_constraints(const std::vector<IntVector>& constraints, std::size_t dim) {
  std::unordered_set<IntVector, IntVectorHash> seen;
  std::vector<IntVector> out;
  for (const auto& a : constraints) {
    if (a.size() != dim) throw std::invalid_argument("constraint length does not match dimension");
    if (is_zero_vector(a)) continue;
    IntVector p = make_primitive(a);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  std::stable_sort(out.begin(), out.end(), [](const IntVector& x, const IntVector& y) {
    std::size_t sx = support_size(x), sy = support_size(y);
    if (sx != sy) return sx < sy;
    return x < y;
  });
  return out;
}

// a*x + b*y, made primitive
IntVector combine(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y) {
  IntVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
  make_primitive_in_place(r);
  return r;
}

}  // namespace

ConeGenerators double_description(const std::vector<IntVector>& raw_constraints, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("double_description: dimension must be positive");
  const std::vector<IntVector> constraints = prepare_constraints(raw_constraints, dim);
  const std::size_t m = constraints.size();

  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < m; ++k) {
    const IntVector& a = constraints[k];

    std::size_t pivot = lineality.size();
    Integer pivot_val;
    for (std::size_t i = 0; i < lineality.size(); ++i) {
      Integer t = dot(a, lineality[i]);
      if (t.is_zero()) continue;
      if (pivot == lineality.size() || abs(t) < abs(pivot_val)) {
        pivot = i;
        pivot_val = t;
      }
    }

    if (pivot < lineality.size()) {
      // The constraint cuts the lineality space: one direction becomes a ray.
      IntVector l0 = lineality[pivot];
      if (pivot_val.sign() < 0) {
        for (auto& x : l0) x.negate();
        pivot_val.negate();
      }
      std::vector<IntVector> new_lineality;
      for (std::size_t i = 0; i < lineality.size(); ++i) {
        if (i == pivot) continue;
        Integer t = dot(a, lineality[i]);
        if (t.is_zero()) {
          new_lineality.push_back(lineality[i]);
        } else {
          new_lineality.push_back(combine(pivot_val, lineality[i], -t, l0));
        }
      }
      for (auto& r : rays) {
        Integer t = dot(a, r.v);
        if (!t.is_zero()) r.v = combine(pivot_val, r.v, -t, l0);
        r.zeros.set(k);
      }
      Ray nr{l0, Bits(m)};
      for (std::size_t j = 0; j < k; ++j) nr.zeros.set(j);
      rays.push_back(std::move(nr));
      lineality = std::move(new_lineality);
      continue;
    }

    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      int s = val[i].sign();
      if (s > 0) pos.push_back(i);
      else if (s < 0) neg.push_back(i);
      else rays[i].zeros.set(k);
    }
    if (neg.empty()) continue;

    const std::size_t pointed_dim = dim - lineality.size();
    const std::size_t min_common = pointed_dim >= 2 ? pointed_dim - 2 : 0;
    std::vector<Ray> created;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (common.count() < min_common) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        // val[p] > 0 > val[q]; the combination is tight on constraint k.
        Ray nr{combine(val[p], rays[q].v, -val[q], rays[p].v), common};
        nr.zeros.set(k);
        created.push_back(std::move(nr));
      }
    }
    std::vector<Ray> next;
    next.reserve(rays.size() - neg.size() + created.size());
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i].sign() >= 0) next.push_back(std::move(rays[i]));
    for (auto& r : created) next.push_back(std::move(r));
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = std::move(lineality);
  for (auto& l : out.lineality) make_primitive_in_place(l);
  out.rays.reserve(rays.size());
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

}  // namespace toricnash
