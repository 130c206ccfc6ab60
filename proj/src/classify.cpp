#include "quandle/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "quandle/congruence.hpp"
#include "quandle/error.hpp"
#include "quandle/orbitseries.hpp"

namespace quandle {

namespace {

using Level = std::set<ElementSet>;

// Level k holds every image R_{c_k} ... R_{c_1}(Q). Returns the least
// k <= max_levels whose images are all singletons, or nothing if none is
// found within max_levels or the sequence of levels starts repeating.
std::optional<std::size_t> first_collapsing_level(Quandle const& q,
                                                  std::size_t max_levels,
                                                  std::size_t work_cap) {
  std::size_t const n = q.order();
  ElementSet all(n);
  for (Element x = 0; x < n; ++x) {
    all[x] = x;
  }
  Level level{all};
  std::vector<Level> history;
  std::size_t work = 0;
  for (std::size_t k = 0;; ++k) {
    bool const collapsed = std::all_of(
        level.begin(), level.end(), [](ElementSet const& s) { return s.size() == 1; });
    if (collapsed) {
      return k;
    }
    if (k == max_levels
        || std::find(history.begin(), history.end(), level) != history.end()) {
      return std::nullopt;
    }
    history.push_back(level);
    Level next;
    for (auto const& s : level) {
      work += s.size() * n;
      if (work > work_cap) {
        throw WorkCapExceeded("reductivity identity check", work_cap);
      }
      for (Element c = 0; c < n; ++c) {
        ElementSet image;
        image.reserve(s.size());
        for (Element x : s) {
          image.push_back(q(x, c));
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        next.insert(std::move(image));
      }
    }
    level = std::move(next);
  }
}

ReductivityRoutes routes_with_inn(Quandle const& q, PermGroup const& inn_group,
                                  Caps const& caps) {
  ReductivityRoutes r;
  r.o_chain = o_chain(q, caps.group).reaches_identity_at();
  r.identity = reductive_degree_by_identity(q, caps.work);
  if (auto c = nilpotency_class(inn_group)) {
    r.inn_class = q.order() == 1 ? 0 : *c + 1;
  }
  auto chain = l_chain(q);
  if (chain.back().order() == 1) {
    r.l_chain = chain.size() - 1;
  }
  return r;
}

std::optional<std::size_t> checked_degree(ReductivityRoutes const& r) {
  if (!r.agree()) {
    auto show = [](std::optional<std::size_t> v) {
      return v ? std::to_string(*v) : std::string("none");
    };
    throw InconsistentCharacterizations(
        "reductive degree routes disagree: o-chain " + show(r.o_chain)
        + ", identity " + show(r.identity) + ", inn class " + show(r.inn_class)
        + ", l-chain " + show(r.l_chain));
  }
  return r.o_chain;
}

}  // namespace

bool is_n_reductive(Quandle const& q, std::size_t n, std::size_t work_cap) {
  if (n == 0) {
    throw InvalidInput("n-reductivity needs n >= 1");
  }
  return first_collapsing_level(q, n, work_cap).has_value();
}

std::optional<std::size_t> reductive_degree_by_identity(Quandle const& q,
                                                        std::size_t work_cap) {
  return first_collapsing_level(q, SIZE_MAX, work_cap);
}

bool ReductivityRoutes::agree() const noexcept {
  return o_chain == identity && o_chain == inn_class && o_chain == l_chain;
}

ReductivityRoutes reductivity_routes(Quandle const& q, Caps const& caps) {
  return routes_with_inn(q, inn(q, caps.group), caps);
}

std::optional<std::size_t> reductive_degree(Quandle const& q, Caps const& caps) {
  return checked_degree(reductivity_routes(q, caps));
}

bool is_n_locally_reductive(Quandle const& q, std::size_t n) {
  if (n == 0) {
    throw InvalidInput("local reductivity needs n >= 1");
  }
  for (Element b = 0; b < q.order(); ++b) {
    for (Element a = 0; a < q.order(); ++a) {
      Element x = a;
      for (std::size_t i = 0; i < n; ++i) {
        x = q(x, b);
      }
      if (x != b) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::size_t> locally_reductive_degree(Quandle const& q) {
  std::size_t const n = q.order();
  std::size_t degree = 0;
  for (Element b = 0; b < n; ++b) {
    // Image of the carrier under powers of R_b: x ↦ x ▷ b.
    std::vector<char> in(n, 1);
    std::size_t size = n;
    std::size_t steps = 0;
    while (size > 1) {
      std::vector<char> next(n, 0);
      std::size_t next_size = 0;
      for (Element x = 0; x < n; ++x) {
        if (in[x] && !next[q(x, b)]) {
          next[q(x, b)] = 1;
          ++next_size;
        }
      }
      if (next == in) {
        return std::nullopt;
      }
      in = std::move(next);
      size = next_size;
      ++steps;
    }
    degree = std::max(degree, steps);
  }
  return degree;
}

bool is_medial(Quandle const& q) {
  std::size_t const n = q.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        Element const ab = q(a, b);
        Element const ac = q(a, c);
        for (Element d = 0; d < n; ++d) {
          if (q(ab, q(c, d)) != q(ac, q(b, d))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool is_connected(Quandle const& q) { return orbits(q).size() == 1; }

bool is_faithful(Quandle const& q) {
  return lambda(q).partition().is_discrete();
}

bool is_abelian_quandle(Quandle const& q, std::size_t group_cap) {
  PermGroup const t = trans(q, group_cap);
  return is_abelian(t) && is_semiregular(t);
}

bool is_nilpotent_quandle(Quandle const& q, std::size_t group_cap) {
  return nilpotency_class(trans(q, group_cap)).has_value();
}

bool is_solvable_quandle(Quandle const& q, std::size_t group_cap) {
  return derived_length(trans(q, group_cap)).has_value();
}

std::vector<Permutation> regular_representation(GroupTable const& group) {
  std::vector<Permutation> out;
  out.reserve(group.order());
  for (Element x = 0; x < group.order(); ++x) {
    std::vector<Element> image(group.order());
    for (Element y = 0; y < group.order(); ++y) {
      image[y] = group.mul(x, y);
    }
    out.emplace_back(std::move(image));
  }
  return out;
}

PermGroup regular_group(GroupTable const& group) {
  auto perms = regular_representation(group);
  return closure(group.order(), perms);
}

bool conj_two_engel_check(GroupTable const& group, ElementSet const& subset) {
  Quandle const q = conj_subset(group, subset, 1);
  auto const regular = regular_representation(group);
  std::vector<Permutation> h;
  for (Element x : subset) {
    h.push_back(regular[x]);
  }
  PermGroup const generated = closure(group.order(), h);
  bool engel = true;
  for (auto const& g : generated.elements()) {
    for (auto const& x : h) {
      if (!engel_bracket(x, g, 2).is_identity()) {
        engel = false;
        break;
      }
    }
    if (!engel) {
      break;
    }
  }
  bool const tree = in_tos(degrees(q), 2);
  if (engel != tree) {
    throw InconsistentCharacterizations(
        "2-Engel test and orbit tree disagree on tOS_2 membership");
  }
  return engel;
}

ClassificationReport classify(Quandle const& q, Caps const& caps) {
  ClassificationReport r;
  r.label = q.label();
  r.order = q.order();
  auto const orbit_list = orbits(q);
  for (auto const& orbit : orbit_list) {
    r.orbit_sizes.push_back(orbit.size());
  }
  std::sort(r.orbit_sizes.rbegin(), r.orbit_sizes.rend());
  r.connected = orbit_list.size() == 1;
  r.faithful = is_faithful(q);
  r.medial = is_medial(q);

  PermGroup const inn_group = inn(q, caps.group);
  PermGroup const trans_group = trans(q, caps.group);
  r.inn_order = inn_group.size();
  r.trans_order = trans_group.size();
  r.inn_nilpotency_class = nilpotency_class(inn_group);
  r.abelian = is_abelian(trans_group) && is_semiregular(trans_group);
  r.nilpotent_quandle = nilpotency_class(trans_group).has_value();
  r.trans_derived_length = derived_length(trans_group);
  r.solvable_quandle = r.trans_derived_length.has_value();

  r.reductive_degree = checked_degree(routes_with_inn(q, inn_group, caps));
  r.locally_reductive_degree = locally_reductive_degree(q);
  auto const d = degrees(q);
  r.os_degree = d.os_degree;
  r.tos_degree = d.tos_degree;
  if (q.order() <= kExactSubquandleLimit) {
    r.ncs = is_ncs(q, caps.subsets);
  }

  if (r.locally_reductive_degree && r.tos_degree
      && *r.locally_reductive_degree > *r.tos_degree) {
    throw InconsistentCharacterizations(
        "locally reductive degree exceeds tOS degree");
  }
  if (r.tos_degree && r.reductive_degree
      && *r.tos_degree > *r.reductive_degree) {
    throw InconsistentCharacterizations("tOS degree exceeds reductive degree");
  }
  return r;
}

}  // namespace quandle
