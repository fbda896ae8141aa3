#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cdl/enclosing.hpp"
#include "cdl/instance.hpp"

namespace cdl {

// Sequence-level cap criterion: every interior point sees the two ends at
// an angle of at least pi/2. Callers supply the points in (weakly) convex
// chain order; two points are vacuously a cap.
template <class K>
bool is_cap(std::span<const typename K::Pt> pts, const K& k = {}) {
  if (pts.size() < 2) throw std::invalid_argument("is_cap: need >= 2 points");
  for (size_t i = 1; i + 1 < pts.size(); ++i)
    if (!k.not_acute(pts.front(), pts[i], pts.back())) return false;
  return true;
}

// A contiguous cyclic range of a convex instance satisfying the cap
// criterion. Views its parent instance; the instance must outlive the cap.
template <class K>
class Cap {
 public:
  using Pt = typename K::Pt;

  Cap(const ConvexInstance<K>& inst, size_t first, size_t len)
      : inst_(&inst), first_(first), len_(len) {
    size_t n = inst.size();
    if (first >= n || len < 2 || len > n)
      throw std::invalid_argument("cap: bad range");
    const Pt& a = point(0);
    const Pt& b = point(len - 1);
    for (size_t i = 1; i + 1 < len; ++i)
      if (!inst.kernel().not_acute(a, point(i), b))
        throw std::invalid_argument("cap: right-angle criterion fails");
    side_ = interior_side();
  }

  size_t size() const { return len_; }
  const ConvexInstance<K>& instance() const { return *inst_; }
  size_t instance_index(size_t pos) const {
    return (first_ + pos) % inst_->size();
  }
  const Pt& point(size_t pos) const { return inst_->point(instance_index(pos)); }
  size_t endpoint_a() const { return instance_index(0); }
  size_t endpoint_b() const { return instance_index(len_ - 1); }

  // Which side of the endpoint line counts as "not separated from the cap";
  // 0 when there is no interior point to tell (both sides accepted).
  int cap_side() const { return side_; }

  bool side_ok(const Pt& x) const {
    int s = inst_->kernel().side(point(0), point(len_ - 1), x);
    return s == 0 || side_ == 0 || s == side_;
  }

  // True iff instance index i belongs to this cap's range.
  bool contains_index(size_t i) const {
    return inst_->offset(first_, i) < len_;
  }

 private:
  int interior_side() const {
    const auto& k = inst_->kernel();
    for (size_t i = 1; i + 1 < len_; ++i) {
      int s = k.side(point(0), point(len_ - 1), point(i));
      if (s != 0) return s;
    }
    // no usable interior: fall back to "away from the rest of the instance"
    for (size_t i = len_; i < inst_->size(); ++i) {
      int s = k.side(point(0), point(len_ - 1),
                     inst_->point(instance_index(i)));
      if (s != 0) return -s;
    }
    return 0;
  }

  const ConvexInstance<K>* inst_;
  size_t first_;
  size_t len_;
  int side_ = 0;
};

// The whole instance as a single cap (arc-like instances only; throws if
// the cap criterion fails).
template <class K>
Cap<K> whole_cap(const ConvexInstance<K>& inst) {
  return Cap<K>(inst, 0, inst.size());
}

// Split the instance at the enclosing-circle support into <= 3 caps that
// share exactly their endpoints and jointly cover every point.
template <class K>
std::vector<Cap<K>> cap_decomposition(const ConvexInstance<K>& inst) {
  SupportSet support = splitting_points(inst);
  size_t m = support.indices.size();
  internal_check(m >= 2, "decomposition needs >= 2 split points");
  std::vector<Cap<K>> caps;
  size_t covered = 0;
  for (size_t s = 0; s < m; ++s) {
    size_t from = support.indices[s];
    size_t to = support.indices[(s + 1) % m];
    size_t len = inst.offset(from, to) + 1;
    caps.emplace_back(inst, from, len);
    covered += len - 1;
  }
  internal_check(covered == inst.size(), "caps must cover the instance");
  return caps;
}

// Unordered pair of instance indices with its perpendicular-bisector census:
// good = at most one other point of the instance is equidistant from both
// endpoints.
struct EdgeClass {
  std::array<size_t, 2> edge;
  bool good;
  std::vector<size_t> bisector_points;
};

template <class K>
EdgeClass classify_edge(const ConvexInstance<K>& inst, size_t i, size_t j) {
  size_t n = inst.size();
  if (i >= n || j >= n || i == j)
    throw std::invalid_argument("classify_edge: bad edge");
  EdgeClass out{{std::min(i, j), std::max(i, j)}, true, {}};
  const auto& k = inst.kernel();
  for (size_t x = 0; x < n; ++x) {
    if (x == i || x == j) continue;
    if (k.bisector(inst.point(x), inst.point(i), inst.point(j)))
      out.bisector_points.push_back(x);
  }
  internal_check(out.bisector_points.size() <= 2,
                 "convex position admits at most 2 equidistant points");
  out.good = out.bisector_points.size() <= 1;
  return out;
}

namespace detail {

// Calls fn(apex, group) for every maximal group (size >= 2) of indices
// whose distance to the apex is the same, for every apex in [0, n).
// Exact backend groups by equality; float backend by single-linkage
// eps-chaining over the sorted squared distances.
template <class K, class F>
void for_each_equidistant_group(const ConvexInstance<K>& inst,
                                std::span<const size_t> members, F&& fn) {
  using S = typename K::Scalar;
  const auto& k = inst.kernel();
  std::vector<std::pair<S, size_t>> dist;
  std::vector<size_t> group;
  for (size_t w : members) {
    dist.clear();
    for (size_t i : members) {
      if (i == w) continue;
      dist.emplace_back(k.sqdist(inst.point(w), inst.point(i)), i);
    }
    std::sort(dist.begin(), dist.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t start = 0;
    auto flush = [&](size_t end) {
      if (end - start >= 2) {
        group.clear();
        for (size_t t = start; t < end; ++t) group.push_back(dist[t].second);
        fn(w, std::span<const size_t>(group));
      }
      start = end;
    };
    for (size_t t = 1; t < dist.size(); ++t)
      if (!k.scalar_eq(dist[t - 1].first, dist[t].first)) flush(t);
    flush(dist.size());
  }
}

inline std::vector<size_t> iota_members(size_t n) {
  std::vector<size_t> v(n);
  for (size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace detail

// Number of good edges of the whole instance. Counted by charging every
// apex's equidistant pairs to the pair, which is O(n^2 log n) instead of
// scanning all points per edge.
template <class K>
size_t good_edge_count(const ConvexInstance<K>& inst) {
  size_t n = inst.size();
  std::vector<uint8_t> hits(n * n, 0);
  auto members = detail::iota_members(n);
  detail::for_each_equidistant_group(
      inst, members, [&](size_t, std::span<const size_t> g) {
        for (size_t a = 0; a < g.size(); ++a)
          for (size_t b = a + 1; b < g.size(); ++b) {
            size_t lo = std::min(g[a], g[b]), hi = std::max(g[a], g[b]);
            uint8_t& h = hits[lo * n + hi];
            if (h < 3) ++h;
          }
      });
  size_t good = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      internal_check(hits[i * n + j] <= 2,
                     "convex position admits at most 2 equidistant points");
      if (hits[i * n + j] <= 1) ++good;
    }
  return good;
}

// The unique witness (if any) for the cap edge at cap positions ci, cj:
// the instance point on the perpendicular bisector that the endpoint line
// does not separate from the cap. Closed side: points on the line qualify.
template <class K>
std::optional<size_t> find_witness(const Cap<K>& cap, size_t ci, size_t cj) {
  if (ci >= cap.size() || cj >= cap.size() || ci == cj)
    throw std::invalid_argument("find_witness: bad cap positions");
  const auto& inst = cap.instance();
  const auto& k = inst.kernel();
  size_t i = cap.instance_index(ci), j = cap.instance_index(cj);
  std::optional<size_t> found;
  for (size_t x = 0; x < inst.size(); ++x) {
    if (x == i || x == j) continue;
    if (!k.bisector(inst.point(x), inst.point(i), inst.point(j))) continue;
    if (!cap.side_ok(inst.point(x))) continue;
    internal_check(!found.has_value(), "witness must be unique");
    found = x;
  }
  if (found.has_value()) {
    // witnesses sit strictly between the edge endpoints in the walk a -> b
    size_t a = cap.endpoint_a();
    size_t off_i = inst.offset(a, i), off_j = inst.offset(a, j);
    size_t off_x = inst.offset(a, *found);
    internal_check(off_x > std::min(off_i, off_j) &&
                       off_x < std::max(off_i, off_j),
                   "witness must lie between the edge endpoints");
  }
  return found;
}

// Edges with both endpoints in the cap whose witness exists and also lies
// in the cap. Always at most t^2/4.
template <class K>
size_t witnessed_edges_in_cap(const Cap<K>& cap) {
  size_t t = cap.size();
  const auto& inst = cap.instance();
  std::vector<size_t> members(t);
  for (size_t p = 0; p < t; ++p) members[p] = cap.instance_index(p);
  std::vector<uint8_t> hit(inst.size() * inst.size(), 0);
  detail::for_each_equidistant_group(
      inst, members, [&](size_t, std::span<const size_t> g) {
        for (size_t a = 0; a < g.size(); ++a)
          for (size_t b = a + 1; b < g.size(); ++b) {
            size_t lo = std::min(g[a], g[b]), hi = std::max(g[a], g[b]);
            uint8_t& h = hit[lo * inst.size() + hi];
            if (h < 3) ++h;
          }
      });
  size_t count = 0;
  for (size_t a = 0; a < t; ++a)
    for (size_t b = a + 1; b < t; ++b) {
      size_t ia = members[a], ib = members[b];
      size_t lo = std::min(ia, ib), hi = std::max(ia, ib);
      uint8_t h = hit[lo * inst.size() + hi];
      if constexpr (K::is_exact)
        internal_check(h <= 1, "witness must be unique");
      if (h >= 1) ++count;
    }
  internal_check(4 * count <= t * t, "witnessed edges exceed t^2/4");
  return count;
}

// Edges with both endpoints in the cap whose witness exists anywhere in
// the instance (the witness need not belong to the cap). The companion
// count to witnessed_edges_in_cap; the two differ exactly on witnesses
// outside the cap.
template <class K>
size_t witnessed_edges_in_instance(const Cap<K>& cap) {
  size_t t = cap.size(), count = 0;
  for (size_t a = 0; a < t; ++a)
    for (size_t b = a + 1; b < t; ++b)
      if (find_witness(cap, a, b).has_value()) ++count;
  return count;
}

// Cap-position pairs (p < split <= q) whose edge has a witness among the
// cap points.
template <class K>
std::vector<std::array<size_t, 2>> witnessed_straddling_edge_list(
    const Cap<K>& cap, size_t split) {
  size_t t2 = cap.size();
  if (split == 0 || split >= t2)
    throw std::invalid_argument("witnessed_straddling_edge_list: bad split");
  const auto& inst = cap.instance();
  std::vector<size_t> members(t2);
  for (size_t p = 0; p < t2; ++p) members[p] = cap.instance_index(p);
  std::vector<size_t> pos_of(inst.size(), size_t(-1));
  for (size_t p = 0; p < t2; ++p) pos_of[members[p]] = p;
  std::vector<uint8_t> hit(t2 * t2, 0);
  detail::for_each_equidistant_group(
      inst, members, [&](size_t, std::span<const size_t> g) {
        for (size_t a = 0; a < g.size(); ++a)
          for (size_t b = a + 1; b < g.size(); ++b) {
            size_t pa = pos_of[g[a]], pb = pos_of[g[b]];
            size_t lo = std::min(pa, pb), hi = std::max(pa, pb);
            uint8_t& h = hit[lo * t2 + hi];
            if (h < 3) ++h;
          }
      });
  std::vector<std::array<size_t, 2>> edges;
  for (size_t a = 0; a < split; ++a)
    for (size_t b = split; b < t2; ++b) {
      if constexpr (K::is_exact)
        internal_check(hit[a * t2 + b] <= 1, "witness must be unique");
      if (hit[a * t2 + b] >= 1) edges.push_back({a, b});
    }
  return edges;
}

// Edges with one endpoint among the first `split` cap points and the other
// among the rest, having a witness in the cap. Requires size == 2*split;
// the count never exceeds (7 t^2 + t)/8 for t = split.
template <class K>
size_t straddling_witnessed_edges(const Cap<K>& cap, size_t split) {
  if (split * 2 != cap.size())
    throw std::invalid_argument("straddling_witnessed_edges: size must be 2t");
  size_t count = witnessed_straddling_edge_list(cap, split).size();
  internal_check(8 * count <= 7 * split * split + split,
                 "straddling witnessed edges exceed (7t^2+t)/8");
  return count;
}

}  // namespace cdl
