#include <algorithm>
#include <functional>
#include <map>

#include "quandle/core.hpp"

namespace quandle {

namespace {

using ElementKey = std::vector<std::uint32_t>;

// Per-element invariant: orbit size, number of x with x ▷ a = a, then the
// sorted cycle type of L_a.
std::vector<ElementKey> element_keys(Quandle const& q) {
  std::size_t const n = q.order();
  std::vector<std::uint32_t> orbit_size(n);
  for (auto const& orbit : orbits(q)) {
    for (Element x : orbit) {
      orbit_size[x] = static_cast<std::uint32_t>(orbit.size());
    }
  }
  std::vector<ElementKey> keys(n);
  std::vector<char> visited(n);
  for (Element a = 0; a < n; ++a) {
    ElementKey& key = keys[a];
    key.push_back(orbit_size[a]);
    std::uint32_t fixers = 0;
    for (Element x = 0; x < n; ++x) {
      fixers += q(x, a) == a;
    }
    key.push_back(fixers);
    std::fill(visited.begin(), visited.end(), 0);
    std::vector<std::uint32_t> cycles;
    for (Element b = 0; b < n; ++b) {
      if (visited[b]) {
        continue;
      }
      std::uint32_t length = 0;
      for (Element c = b; !visited[c]; c = q(a, c)) {
        visited[c] = 1;
        ++length;
      }
      cycles.push_back(length);
    }
    std::sort(cycles.begin(), cycles.end());
    key.insert(key.end(), cycles.begin(), cycles.end());
  }
  return keys;
}

}  // namespace

std::vector<std::uint64_t> invariant_signature(Quandle const& q) {
  std::vector<std::uint64_t> signature;
  signature.reserve(q.order() + 1);
  signature.push_back(q.order());
  for (auto const& key : element_keys(q)) {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint32_t v : key) {
      h = (h ^ v) * 1099511628211ULL;
    }
    signature.push_back(h);
  }
  std::sort(signature.begin() + 1, signature.end());
  return signature;
}

bool is_isomorphism(Quandle const& from, Quandle const& to,
                    std::span<Element const> map) {
  std::size_t const n = from.order();
  if (to.order() != n || map.size() != n) {
    return false;
  }
  std::vector<char> hit(n, 0);
  for (Element image : map) {
    if (image >= n || hit[image]) {
      return false;
    }
    hit[image] = 1;
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (map[from(a, b)] != to(map[a], map[b])) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Isomorphism> is_isomorphic(Quandle const& q1,
                                         Quandle const& q2) {
  std::size_t const n = q1.order();
  if (q2.order() != n) {
    return std::nullopt;
  }
  auto keys1 = element_keys(q1);
  auto keys2 = element_keys(q2);
  {
    auto sorted1 = keys1;
    auto sorted2 = keys2;
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    if (sorted1 != sorted2) {
      return std::nullopt;
    }
  }

  // Products landing on each element, so a pair is checked as soon as all
  // three of a, b and a ▷ b are mapped.
  std::vector<std::vector<std::pair<Element, Element>>> landing(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      landing[q1(a, b)].emplace_back(a, b);
    }
  }

  constexpr Element kUnset = ~Element{0};
  std::vector<Element> map(n, kUnset);
  std::vector<char> used(n, 0);

  auto consistent = [&](Element k) {
    for (Element i = 0; i <= k; ++i) {
      Element const p = q1(i, k);
      if (map[p] != kUnset && map[p] != q2(map[i], map[k])) {
        return false;
      }
      Element const r = q1(k, i);
      if (map[r] != kUnset && map[r] != q2(map[k], map[i])) {
        return false;
      }
    }
    for (auto [a, b] : landing[k]) {
      if (map[a] != kUnset && map[b] != kUnset
          && map[k] != q2(map[a], map[b])) {
        return false;
      }
    }
    return true;
  };

  std::function<bool(Element)> extend = [&](Element k) {
    if (k == n) {
      return true;
    }
    for (Element y = 0; y < n; ++y) {
      if (used[y] || keys2[y] != keys1[k]) {
        continue;
      }
      map[k] = y;
      used[y] = 1;
      if (consistent(k) && extend(k + 1)) {
        return true;
      }
      used[y] = 0;
      map[k] = kUnset;
    }
    return false;
  };

  if (!extend(0)) {
    return std::nullopt;
  }
  return Isomorphism{std::move(map)};
}

}  // namespace quandle
