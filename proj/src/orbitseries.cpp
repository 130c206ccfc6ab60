#include "quandle/orbitseries.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

#include "quandle/error.hpp"

namespace quandle {

namespace {

void grow(Quandle const& q, OrbitTreeNode& node, std::size_t depth_cap) {
  auto parts = orbits(q, node.subset);
  if (parts.size() == 1) {
    return;
  }
  if (node.depth + 1 > depth_cap) {
    throw DepthCapExceeded("orbit tree depth", depth_cap);
  }
  for (auto& part : parts) {
    OrbitTreeNode child;
    child.subset = std::move(part);
    child.depth = node.depth + 1;
    grow(q, child, depth_cap);
    node.children.push_back(std::move(child));
  }
}

void collect_branches(OrbitTreeNode const& node, std::vector<ElementSet>& path,
                      std::vector<std::vector<ElementSet>>& out) {
  path.push_back(node.subset);
  if (node.is_leaf()) {
    out.push_back(path);
  } else {
    for (auto const& child : node.children) {
      collect_branches(child, path, out);
    }
  }
  path.pop_back();
}

ElementSet orbit_of(Quandle const& q, ElementSet const& subset, Element x) {
  for (auto& orbit : orbits(q, subset)) {
    if (std::binary_search(orbit.begin(), orbit.end(), x)) {
      return orbit;
    }
  }
  throw InvalidInput("element is not in the subset");
}

using Mask = std::uint64_t;

// Bitmask helpers for the exhaustive subset scans (|Q| <= 16 here).
struct MaskQuandle {
  explicit MaskQuandle(Quandle const& q) : q(q), n(q.order()) {}

  bool closed(Mask s) const {
    for (Mask rest = s; rest; rest &= rest - 1) {
      auto const a = static_cast<Element>(std::countr_zero(rest));
      for (Mask inner = s; inner; inner &= inner - 1) {
        auto const b = static_cast<Element>(std::countr_zero(inner));
        if (!(s >> q(a, b) & 1U)) {
          return false;
        }
      }
    }
    return true;
  }

  bool connected(Mask s) const {
    Mask reach = s & (~s + 1);
    Mask frontier = reach;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) {
        auto const y = static_cast<Element>(std::countr_zero(f));
        for (Mask t = s; t; t &= t - 1) {
          auto const a = static_cast<Element>(std::countr_zero(t));
          next |= Mask{1} << q(a, y);
        }
      }
      frontier = next & ~reach;
      reach |= next;
    }
    return reach == s;
  }

  static ElementSet to_set(Mask s) {
    ElementSet out;
    for (; s; s &= s - 1) {
      out.push_back(static_cast<Element>(std::countr_zero(s)));
    }
    return out;
  }

  Quandle const& q;
  std::size_t n;
};

void sort_subsets(std::vector<ElementSet>& subsets) {
  std::sort(subsets.begin(), subsets.end(),
            [](ElementSet const& x, ElementSet const& y) {
              if (x.size() != y.size()) {
                return x.size() < y.size();
              }
              return x < y;
            });
}

}  // namespace

OrbitTreeNode orbit_tree(Quandle const& q, std::size_t depth_cap) {
  if (depth_cap == 0) {
    depth_cap = q.order();
  }
  OrbitTreeNode root;
  root.subset.resize(q.order());
  std::iota(root.subset.begin(), root.subset.end(), Element{0});
  grow(q, root, depth_cap);
  return root;
}

std::size_t node_count(OrbitTreeNode const& root) {
  std::size_t count = 1;
  for (auto const& child : root.children) {
    count += node_count(child);
  }
  return count;
}

std::size_t tree_depth(OrbitTreeNode const& root) {
  std::size_t depth = root.depth;
  for (auto const& child : root.children) {
    depth = std::max(depth, tree_depth(child));
  }
  return depth;
}

std::vector<std::vector<ElementSet>> branches(OrbitTreeNode const& root) {
  std::vector<std::vector<ElementSet>> out;
  std::vector<ElementSet> path;
  collect_branches(root, path, out);
  return out;
}

SeriesDegrees degrees(OrbitTreeNode const& tree) {
  SeriesDegrees d;
  bool singleton_leaves = true;
  for (auto const& branch : branches(tree)) {
    d.os_degree = std::max(d.os_degree, branch.size() - 1);
    singleton_leaves = singleton_leaves && branch.back().size() == 1;
  }
  if (singleton_leaves) {
    d.tos_degree = d.os_degree;
  }
  return d;
}

SeriesDegrees degrees(Quandle const& q) { return degrees(orbit_tree(q)); }

bool in_os(SeriesDegrees const& d, std::size_t n) { return d.os_degree <= n; }

bool in_tos(SeriesDegrees const& d, std::size_t n) {
  return d.tos_degree.has_value() && *d.tos_degree <= n;
}

std::vector<ElementSet> principal_series(Quandle const& q, Element x) {
  if (x >= q.order()) {
    throw InvalidInput("element out of range");
  }
  ElementSet current(q.order());
  std::iota(current.begin(), current.end(), Element{0});
  std::vector<ElementSet> series{current};
  while (true) {
    ElementSet next = orbit_of(q, current, x);
    if (next == current) {
      break;
    }
    series.push_back(next);
    current = std::move(next);
  }
  return series;
}

SubquandleList all_subquandles(Quandle const& q, std::size_t cap) {
  std::size_t const n = q.order();
  SubquandleList out;
  if (n <= kExactSubquandleLimit) {
    Mask const total = Mask{1} << n;
    if (total - 1 > cap) {
      throw CapExceeded("subquandle scan", cap);
    }
    MaskQuandle mq(q);
    for (Mask s = 1; s < total; ++s) {
      if (mq.closed(s)) {
        out.subsets.push_back(MaskQuandle::to_set(s));
      }
    }
  } else {
    std::size_t const seeds = n * (n - 1) * (n - 2) / 6 + n * n;
    if (seeds > cap) {
      throw CapExceeded("subquandle seed search", cap);
    }
    std::set<ElementSet> found;
    for (Element a = 0; a < n; ++a) {
      for (Element b = a; b < n; ++b) {
        for (Element c = b; c < n; ++c) {
          found.insert(subquandle_closure(q, {a, b, c}));
        }
      }
    }
    out.subsets.assign(found.begin(), found.end());
    out.complete = false;
  }
  sort_subsets(out.subsets);
  return out;
}

bool is_ncs(Quandle const& q, std::size_t cap) {
  std::size_t const n = q.order();
  if (n > kExactSubquandleLimit) {
    throw CapExceeded("exhaustive subquandle scan above order 16",
                      kExactSubquandleLimit);
  }
  Mask const total = Mask{1} << n;
  if (total - 1 > cap) {
    throw CapExceeded("subquandle scan", cap);
  }
  MaskQuandle mq(q);
  for (Mask s = 1; s < total; ++s) {
    if (std::popcount(s) >= 2 && mq.closed(s) && mq.connected(s)) {
      return false;
    }
  }
  return true;
}

}  // namespace quandle
