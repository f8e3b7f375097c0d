#include "toricnash/nash.hpp"

#include "toricnash/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace toricnash {

namespace {

// Determinants of n-subsets of a fixed vector list. Uses 128-bit Bareiss
// when the Hadamard bound guarantees no overflow.
class SubsetDeterminant {
 public:
  explicit SubsetDeterminant(const std::vector<IntVector>& elements) : elements_(elements) {
    n_ = elements.empty() ? 0 : elements.front().size();
    double max_norm = 0;
    small_ = true;
    for (const auto& e : elements) {
      double norm = 0;
      std::vector<std::int64_t> row;
      for (const auto& x : e) {
        if (!x.is_small() || abs(x) > Integer(1 << 30)) small_ = false;
        if (!small_) break;
        row.push_back(x.small());
        norm += static_cast<double>(x.small()) * static_cast<double>(x.small());
      }
      if (!small_) break;
      max_norm = std::max(max_norm, std::sqrt(norm));
      fast_.push_back(std::move(row));
    }
    if (small_ && static_cast<double>(n_) * std::log2(std::max(max_norm, 1.0)) >= 60) small_ = false;
  }

  bool is_basis(const std::vector<std::size_t>& idx, Characteristic p) const {
    if (!small_) {
      std::vector<IntVector> cols;
      for (std::size_t i : idx) cols.push_back(elements_[i]);
      return is_basis_modulo(cols, p);
    }
    __int128 d = fast_det(idx);
    if (p.is_zero()) return d != 0;
    return d % p.value() != 0;
  }

 private:
  __int128 fast_det(const std::vector<std::size_t>& idx) const {
    const std::size_t n = n_;
    __int128 m[8][8];
    if (n > 8) throw std::logic_error("fast determinant limited to rank 8");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m[r][c] = fast_[idx[c]][r];
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k][k] == 0) {
        std::size_t s = k + 1;
        while (s < n && m[s][k] == 0) ++s;
        if (s == n) return 0;
        for (std::size_t c = 0; c < n; ++c) std::swap(m[k][c], m[s][c]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
  }

  const std::vector<IntVector>& elements_;
  std::size_t n_ = 0;
  bool small_ = false;
  std::vector<std::vector<std::int64_t>> fast_;
};

void check_spanning(const std::vector<IntVector>& elements) {
  if (elements.empty()) throw std::invalid_argument("empty generator set");
  if (rank(elements) != elements.front().size()) throw std::invalid_argument("generators do not have full rank");
}

template <class T>
std::vector<Child<T>> sorted_children(std::map<CanonicalKey, T>& by_key) {
  std::vector<Child<T>> out;
  out.reserve(by_key.size());
  for (auto& [k, v] : by_key) out.push_back({k, std::move(v)});
  return out;
}

// Ray set of the face of c cut out by the facets vanishing on all of `inside`.
std::vector<IntVector> minimal_face_rays(const Cone& c, const std::vector<IntVector>& inside) {
  std::vector<IntVector> tight;
  for (const auto& f : c.facets()) {
    bool all = true;
    for (const auto& v : inside) all = all && dot(f, v).is_zero();
    if (all) tight.push_back(f);
  }
  std::vector<IntVector> out;
  for (const auto& r : c.rays()) {
    bool all = true;
    for (const auto& f : tight) all = all && dot(f, r).is_zero();
    if (all) out.push_back(r);
  }
  return out;
}

}  // namespace

void for_each_basis(const std::vector<IntVector>& elements, Characteristic p,
                    const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  check_spanning(elements);
  const std::size_t n = elements.front().size();
  const std::size_t m = elements.size();
  SubsetDeterminant det(elements);
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (;;) {
    if (det.is_basis(idx, p) && !visit(idx)) return;
    std::size_t i = n;
    while (i > 0 && idx[i - 1] == m - n + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::vector<std::size_t>> enumerate_bases(const std::vector<IntVector>& elements, Characteristic p) {
  std::vector<std::vector<std::size_t>> out;
  for_each_basis(elements, p, [&](const std::vector<std::size_t>& idx) {
    out.push_back(idx);
    return true;
  });
  return out;
}

std::vector<IntVector> basis_sums(const std::vector<IntVector>& elements, Characteristic p) {
  std::unordered_set<IntVector, IntVectorHash> sums;
  const std::size_t n = elements.empty() ? 0 : elements.front().size();
  for_each_basis(elements, p, [&](const std::vector<std::size_t>& idx) {
    IntVector s(n);
    for (std::size_t i : idx) s = s + elements[i];
    sums.insert(std::move(s));
    return true;
  });
  std::vector<IntVector> out(sums.begin(), sums.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineSemigroup> nash_charts(const AffineSemigroup& s, Characteristic p, const NashOptions& options) {
  const std::vector<IntVector>& h = s.hilbert_basis();
  const std::size_t n = s.ambient_rank();
  if (lattice_index(s.basis_matrix()) != Integer(1))
    throw std::invalid_argument("semigroup does not generate the whole lattice");
  auto bases = enumerate_bases(h, p);
  if (bases.size() > options.max_bases)
    throw BlowupLimitExceeded("basis count " + std::to_string(bases.size()) + " exceeds the cap " +
                              std::to_string(options.max_bases));
  SubsetDeterminant det(h);

  std::set<std::vector<IntVector>> charts;
  for (const auto& basis : bases) {
    std::set<IntVector> g(h.begin(), h.end());
    std::vector<bool> in_basis(h.size(), false);
    for (std::size_t i : basis) in_basis[i] = true;
    for (std::size_t gi = 0; gi < h.size(); ++gi) {
      if (in_basis[gi]) continue;
      for (std::size_t pos = 0; pos < n; ++pos) {
        std::vector<std::size_t> exchanged = basis;
        exchanged[pos] = gi;
        if (det.is_basis(exchanged, p)) g.insert(h[gi] - h[basis[pos]]);
      }
    }
    charts.emplace(g.begin(), g.end());
  }

  std::map<std::vector<IntVector>, AffineSemigroup> minimized;
  for (const auto& g : charts) {
    if (!Cone::from_generators(g, n).is_pointed()) continue;
    AffineSemigroup chart = AffineSemigroup::from_generators(g, n);
    minimized.try_emplace(chart.hilbert_basis(), std::move(chart));
  }
  std::vector<AffineSemigroup> out;
  for (auto& [basis, chart] : minimized) out.push_back(std::move(chart));
  return out;
}

std::vector<Child<AffineSemigroup>> nash_children(const AffineSemigroup& s, Characteristic p,
                                                  const NashOptions& options) {
  std::map<CanonicalKey, AffineSemigroup> by_key;
  for (auto& chart : nash_charts(s, p, options)) {
    CanonicalKey key = canonical_semigroup(chart);
    by_key.try_emplace(std::move(key), std::move(chart));
  }
  return sorted_children(by_key);
}

std::vector<Cone> feasible_cones_of_basis_sums(const Cone& c, Characteristic p) {
  if (!c.is_pointed() || !c.is_full_dimensional())
    throw std::invalid_argument("normalized blowup needs a pointed full-dimensional cone");
  std::vector<IntVector> sums = basis_sums(hilbert_basis(c), p);
  PolyhedronSkeleton skeleton = polyhedron_skeleton({sums, c});
  std::vector<Cone> out;
  out.reserve(skeleton.vertices.size());
  for (const auto& v : skeleton.vertices) out.push_back(feasible_cone(v, skeleton));
  return out;
}

std::vector<Child<Cone>> normalized_nash_children(const Cone& c, Characteristic p) {
  std::map<CanonicalKey, Cone> by_key;
  for (auto& f : feasible_cones_of_basis_sums(c, p)) {
    CanonicalKey key = canonical_cone(f).key;
    by_key.try_emplace(std::move(key), std::move(f));
  }
  return sorted_children(by_key);
}

Fan nash_subdivision(const Cone& sigma, Characteristic p) {
  if (!sigma.is_pointed() || !sigma.is_full_dimensional())
    throw std::invalid_argument("subdivision needs a pointed full-dimensional cone");
  Fan fan;
  fan.rank = sigma.ambient_rank();
  for (const auto& f : feasible_cones_of_basis_sums(sigma.dual(), p)) fan.cones.push_back(f.dual());
  std::sort(fan.cones.begin(), fan.cones.end(),
            [](const Cone& a, const Cone& b) { return a.generators() < b.generators(); });
  return fan;
}

bool meet_in_common_face(const Cone& a, const Cone& b) {
  std::vector<IntVector> ineq = a.facets();
  ineq.insert(ineq.end(), b.facets().begin(), b.facets().end());
  for (const auto* c : {&a, &b})
    for (const auto& e : c->equations()) {
      ineq.push_back(e);
      ineq.push_back(scaled(e, Integer(-1)));
    }
  Cone meet = Cone::from_inequalities(ineq, a.ambient_rank());
  std::vector<IntVector> meet_rays = meet.rays();
  std::sort(meet_rays.begin(), meet_rays.end());
  for (const auto* c : {&a, &b}) {
    std::vector<IntVector> face = minimal_face_rays(*c, meet_rays);
    std::sort(face.begin(), face.end());
    if (face != meet_rays) return false;
  }
  return true;
}

std::string fan_subdivision_defect(const Cone& sigma, const Fan& fan) {
  if (fan.cones.empty()) return "fan has no cones";
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const Cone& c = fan.cones[i];
    if (!c.is_pointed() || !c.is_full_dimensional()) return "cone " + std::to_string(i) + " is degenerate";
    if (!sigma.contains(c)) return "cone " + std::to_string(i) + " leaves sigma";
    for (std::size_t j = i + 1; j < fan.cones.size(); ++j)
      if (!meet_in_common_face(c, fan.cones[j]))
        return "cones " + std::to_string(i) + " and " + std::to_string(j) + " do not meet in a common face";
  }
  // Every facet is either on the boundary of sigma or shared with a
  // neighbour on the other side.
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const Cone& c = fan.cones[i];
    for (const auto& f : c.facets()) {
      std::vector<IntVector> face;
      for (const auto& r : c.rays())
        if (dot(f, r).is_zero()) face.push_back(r);
      bool boundary = false;
      for (const auto& g : sigma.facets()) {
        bool all = true;
        for (const auto& r : face) all = all && dot(g, r).is_zero();
        boundary = boundary || all;
      }
      if (boundary) continue;
      IntVector opposite = scaled(f, Integer(-1));
      bool shared = false;
      for (std::size_t j = 0; j < fan.cones.size() && !shared; ++j) {
        if (j == i) continue;
        const auto& fj = fan.cones[j].facets();
        shared = std::find(fj.begin(), fj.end(), opposite) != fj.end();
      }
      if (!shared) return "interior facet of cone " + std::to_string(i) + " has no neighbour";
    }
  }
  return {};
}

IntMatrix reeves_matrix(std::size_t n, std::int64_t j) {
  if (n < 2 || j < 1) throw std::invalid_argument("Reeves cone needs n >= 2 and j >= 1");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, i) = 1;
    m(i, n - 1) = 1;
  }
  m(n - 1, n - 1) = j;
  return m;
}

Cone reeves_cone(std::size_t n, std::int64_t j) { return Cone::from_generators(reeves_matrix(n, j)); }

}  // namespace toricnash
