#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quandle/core.hpp"

namespace quandle {

// One occurrence of a subquandle in the orbit tree. The same subset can
// occur in several branches; each occurrence is its own node.
struct OrbitTreeNode {
  ElementSet subset;
  std::vector<OrbitTreeNode> children;
  std::size_t depth = 0;

  bool is_leaf() const noexcept { return children.empty(); }
};

// Children are the orbits of the induced quandle on the node's subset; a
// node with a single orbit is a leaf. Throws DepthCapExceeded if a branch
// would go deeper than depth_cap (0 means |Q|).
OrbitTreeNode orbit_tree(Quandle const& q, std::size_t depth_cap = 0);

std::size_t node_count(OrbitTreeNode const& root);
std::size_t tree_depth(OrbitTreeNode const& root);
// Root-to-leaf paths, each listed from the root down.
std::vector<std::vector<ElementSet>> branches(OrbitTreeNode const& root);

struct SeriesDegrees {
  // Longest branch; every orbit series stabilizes within this many steps.
  std::size_t os_degree = 0;
  // Longest branch if every leaf is a singleton.
  std::optional<std::size_t> tos_degree;

  bool operator==(SeriesDegrees const&) const = default;
};

SeriesDegrees degrees(Quandle const& q);
SeriesDegrees degrees(OrbitTreeNode const& tree);

// Membership in OS_n and tOS_n for n >= 1; a connected quandle lies in
// every OS_n.
bool in_os(SeriesDegrees const& d, std::size_t n);
bool in_tos(SeriesDegrees const& d, std::size_t n);

// Q_0 = Q, Q_{i+1} = Orb(x, Q_i), listed up to the first repeat.
std::vector<ElementSet> principal_series(Quandle const& q, Element x);

inline constexpr std::size_t kExactSubquandleLimit = 16;

struct SubquandleList {
  std::vector<ElementSet> subsets;
  // False when the carrier is larger than kExactSubquandleLimit and only
  // subquandles generated by at most three elements were found.
  bool complete = true;
};

// Every nonempty closed subset, sorted by size and then lexicographically.
// Up to kExactSubquandleLimit elements every subset is tested; above that
// the closures of all seeds of size <= 3 are collected. Throws CapExceeded
// if more than cap subsets would have to be examined.
SubquandleList all_subquandles(Quandle const& q, std::size_t cap = 1u << 20);

// No closed subset with at least two elements is connected. Independent of
// the orbit tree. Throws CapExceeded above kExactSubquandleLimit.
bool is_ncs(Quandle const& q, std::size_t cap = 1u << 20);

}  // namespace quandle
