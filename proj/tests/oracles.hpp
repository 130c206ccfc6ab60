#pragma once

// Brute-force reference implementations. Deliberately naive: they only use
// the raw table and never call into the algorithms they are compared with.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "quandle/core.hpp"
#include "quandle/group_table.hpp"

namespace oracle {

using quandle::Element;
using quandle::ElementSet;
using quandle::Quandle;
using Flat = std::vector<Element>;

inline bool is_quandle(std::size_t n, Flat const& t) {
  auto op = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (op(a, a) != a) return false;
    std::vector<char> seen(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (op(a, b) >= n || seen[op(a, b)]) return false;
      seen[op(a, b)] = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (op(a, op(b, c)) != op(op(a, b), op(a, c))) return false;
  return true;
}

// Every x reachable from y by applying L_a or its inverse, by fixed point.
inline std::vector<ElementSet> orbits(Quandle const& q, ElementSet const& sub) {
  std::vector<int> label(q.order(), -1);
  for (Element x : sub) label[x] = static_cast<int>(x);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element a : sub)
      for (Element b : sub) {
        Element const c = q(a, b);
        int const lb = label[b];
        int const lc = label[c];
        if (lb != lc) {
          int const m = std::min(lb, lc);
          for (Element x : sub)
            if (label[x] == lb || label[x] == lc) label[x] = m;
          changed = true;
        }
      }
  }
  std::vector<ElementSet> out;
  for (Element x : sub) {
    if (label[x] != static_cast<int>(x)) continue;
    ElementSet s;
    for (Element y : sub)
      if (label[y] == static_cast<int>(x)) s.push_back(y);
    out.push_back(s);
  }
  return out;
}

inline std::vector<ElementSet> orbits(Quandle const& q) {
  ElementSet all(q.order());
  std::iota(all.begin(), all.end(), Element{0});
  return oracle::orbits(q, all);
}

inline ElementSet closure(Quandle const& q, ElementSet s) {
  std::set<Element> cur(s.begin(), s.end());
  while (true) {
    std::set<Element> next = cur;
    for (Element a : cur)
      for (Element b : cur) next.insert(q(a, b));
    if (next == cur) break;
    cur = next;
  }
  return {cur.begin(), cur.end()};
}

// Folds over every tuple (c_1, ..., c_n).
inline bool n_reductive(Quandle const& q, std::size_t n) {
  std::size_t const m = q.order();
  std::vector<Element> c(n, 0);
  while (true) {
    Element first = 0;
    for (Element a = 0; a < m; ++a) {
      Element x = a;
      for (Element ci : c) x = q(x, ci);
      if (a == 0) first = x;
      else if (x != first) return false;
    }
    std::size_t i = 0;
    while (i < n && ++c[i] == m) c[i++] = 0;
    if (i == n) return true;
  }
}

inline std::optional<std::size_t> reductive_degree(Quandle const& q,
                                                   std::size_t max_n) {
  if (q.order() == 1) return 0;
  for (std::size_t n = 1; n <= max_n; ++n)
    if (n_reductive(q, n)) return n;
  return std::nullopt;
}

inline bool n_locally_reductive(Quandle const& q, std::size_t n) {
  for (Element a = 0; a < q.order(); ++a)
    for (Element b = 0; b < q.order(); ++b) {
      Element x = a;
      for (std::size_t i = 0; i < n; ++i) x = q(x, b);
      if (x != b) return false;
    }
  return true;
}

// Compatibility with ▷ and left division, over every quadruple.
inline bool is_congruence(Quandle const& q, std::vector<std::size_t> const& label) {
  std::size_t const n = q.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (label[a] != label[b]) continue;
      for (Element c = 0; c < n; ++c)
        for (Element d = 0; d < n; ++d) {
          if (label[c] != label[d]) continue;
          if (label[q(a, c)] != label[q(b, d)]) return false;
          if (label[q.left_div(a, c)] != label[q.left_div(b, d)]) return false;
        }
    }
  return true;
}

// Every labelling in restricted growth form, filtered.
inline std::size_t congruence_count(Quandle const& q) {
  std::size_t const n = q.order();
  std::vector<std::size_t> label(n, 0);
  std::size_t count = 0;
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      count += is_congruence(q, label) ? 1 : 0;
      return;
    }
    for (std::size_t v = 0; v <= used; ++v) {
      label[i] = v;
      self(self, i + 1, std::max(used, v + 1));
    }
  };
  label[0] = 0;
  rec(rec, 1, 1);
  return count;
}

inline bool isomorphic(Quandle const& x, Quandle const& y) {
  if (x.order() != y.order()) return false;
  std::vector<Element> p(x.order());
  std::iota(p.begin(), p.end(), Element{0});
  do {
    bool ok = true;
    for (Element a = 0; ok && a < x.order(); ++a)
      for (Element b = 0; ok && b < x.order(); ++b)
        ok = p[x(a, b)] == y(p[a], p[b]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Lower central series on the group table: γ_{i+1} generated by [x, g].
inline std::vector<char> subgroup_generated(quandle::GroupTable const& g,
                                            std::vector<char> seed) {
  seed[g.identity()] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x = 0; x < g.order(); ++x)
      for (Element y = 0; y < g.order(); ++y)
        if (seed[x] && seed[y] && !seed[g.mul(x, y)]) {
          seed[g.mul(x, y)] = 1;
          changed = true;
        }
  }
  return seed;
}

inline Element commutator(quandle::GroupTable const& g, Element x, Element y) {
  return g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y));
}

inline std::optional<std::size_t> nilpotency_class(quandle::GroupTable const& g) {
  std::vector<char> term(g.order(), 1);
  for (std::size_t c = 0; c <= g.order(); ++c) {
    if (std::count(term.begin(), term.end(), 1) == 1) return c;
    std::vector<char> seed(g.order(), 0);
    for (Element x = 0; x < g.order(); ++x)
      if (term[x])
        for (Element y = 0; y < g.order(); ++y) seed[commutator(g, x, y)] = 1;
    auto next = subgroup_generated(g, seed);
    if (next == term) return std::nullopt;
    term = next;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> derived_length(quandle::GroupTable const& g) {
  std::vector<char> term(g.order(), 1);
  for (std::size_t d = 0; d <= g.order(); ++d) {
    if (std::count(term.begin(), term.end(), 1) == 1) return d;
    std::vector<char> seed(g.order(), 0);
    for (Element x = 0; x < g.order(); ++x)
      for (Element y = 0; y < g.order(); ++y)
        if (term[x] && term[y]) seed[commutator(g, x, y)] = 1;
    auto next = subgroup_generated(g, seed);
    if (next == term) return std::nullopt;
    term = next;
  }
  return std::nullopt;
}

// [x,_n y] computed on the table: [x,_0 y] = y, [x,_{k+1} y] = [x, [x,_k y]].
inline Element engel(quandle::GroupTable const& g, Element x, Element y,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y = commutator(g, x, y);
  return y;
}

inline bool n_engel_group(quandle::GroupTable const& g, std::size_t n) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (engel(g, x, y, n) != g.identity()) return false;
  return true;
}

}  // namespace oracle
