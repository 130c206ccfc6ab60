#include "quandle/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quandle/detail/union_find.hpp"
#include "quandle/error.hpp"
#include "quandle/group_table.hpp"

namespace quandle {

namespace {

std::string witness_text(std::vector<std::uint32_t> const& witness) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < witness.size(); ++i) {
    os << (i ? "," : "") << witness[i];
  }
  os << ')';
  return os.str();
}

ElementSet normalized(ElementSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

void check_subset(std::size_t order, ElementSet const& subset) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= order) {
      throw InvalidInput("subset element " + std::to_string(subset[i])
                         + " out of range");
    }
    if (i > 0 && subset[i - 1] >= subset[i]) {
      throw InvalidInput("subset must be sorted and duplicate-free");
    }
  }
}

}  // namespace

AxiomViolation::AxiomViolation(int axiom, std::vector<std::uint32_t> witness)
    : Error("axiom " + std::to_string(axiom) + " violated at "
            + witness_text(witness)),
      axiom_(axiom),
      witness_(std::move(witness)) {}

Quandle::Quandle(std::size_t order, std::vector<Element> table,
                 std::string label)
    : order_(order),
      table_(std::move(table)),
      left_div_(order * order),
      label_(std::move(label)) {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      left_div_[a * order_ + table_[a * order_ + b]]
          = static_cast<Element>(b);
    }
  }
}

Table Quandle::table() const {
  Table out(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    auto r = row(static_cast<Element>(a));
    out[a].assign(r.begin(), r.end());
  }
  return out;
}

Quandle Quandle::with_label(std::string label) const {
  Quandle copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

Quandle validate(Table const& table, std::string label) {
  std::size_t const n = table.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw InvalidInput("table is not square: row " + std::to_string(a)
                         + " has " + std::to_string(table[a].size())
                         + " entries, expected " + std::to_string(n));
    }
    flat.insert(flat.end(), table[a].begin(), table[a].end());
  }
  return validate(n, std::move(flat), std::move(label));
}

Quandle validate(std::size_t n, std::vector<Element> flat, std::string label) {
  if (n == 0) {
    throw InvalidInput("a quandle must have at least one element");
  }
  if (flat.size() != n * n) {
    throw InvalidInput("table has " + std::to_string(flat.size())
                       + " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (flat[i] >= n) {
      throw InvalidInput("entry (" + std::to_string(i / n) + ","
                         + std::to_string(i % n) + ") = "
                         + std::to_string(flat[i]) + " is out of range");
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return flat[a * n + b]; };

  for (std::size_t a = 0; a < n; ++a) {
    if (at(a, a) != a) {
      throw AxiomViolation(1, {static_cast<std::uint32_t>(a)});
    }
  }
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[at(a, b)]) {
        throw AxiomViolation(2, {static_cast<std::uint32_t>(a)});
      }
      seen[at(a, b)] = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (at(a, at(b, c)) != at(at(a, b), at(a, c))) {
          throw AxiomViolation(3, {static_cast<std::uint32_t>(a),
                                   static_cast<std::uint32_t>(b),
                                   static_cast<std::uint32_t>(c)});
        }
      }
    }
  }
  return Quandle(n, std::move(flat), std::move(label));
}

Quandle trivial(std::size_t n) {
  if (n == 0) {
    throw InvalidInput("trivial quandle needs n >= 1");
  }
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      flat[a * n + b] = static_cast<Element>(b);
    }
  }
  return validate(n, std::move(flat), "trivial(" + std::to_string(n) + ")");
}

Quandle affine(std::size_t n, std::int64_t t) {
  if (n == 0) {
    throw InvalidInput("affine quandle needs n >= 1");
  }
  auto const m = static_cast<std::int64_t>(n);
  std::int64_t const unit = ((t % m) + m) % m;
  if (std::gcd(unit, m) != 1) {
    throw NotAUnit(std::to_string(t) + " is not a unit modulo "
                   + std::to_string(n));
  }
  std::vector<Element> flat(n * n);
  for (std::int64_t x = 0; x < m; ++x) {
    for (std::int64_t y = 0; y < m; ++y) {
      std::int64_t v = (unit * (((y - x) % m + m) % m) + x) % m;
      flat[x * m + y] = static_cast<Element>(v);
    }
  }
  return validate(n, std::move(flat),
                  "affine(" + std::to_string(n) + "," + std::to_string(t)
                      + ")");
}

Quandle dihedral(std::size_t n) {
  if (n == 0) {
    throw InvalidInput("dihedral quandle needs n >= 1");
  }
  return affine(n, static_cast<std::int64_t>(n) - 1)
      .with_label("dihedral(" + std::to_string(n) + ")");
}

Quandle conj(GroupTable const& group, std::int64_t exponent) {
  ElementSet all(group.order());
  std::iota(all.begin(), all.end(), Element{0});
  return conj_subset(group, std::move(all), exponent)
      .with_label("conj(" + group.label() + "," + std::to_string(exponent)
                  + ")");
}

Quandle conj_subset(GroupTable const& group, ElementSet subset,
                    std::int64_t exponent) {
  subset = normalized(std::move(subset));
  if (subset.empty()) {
    throw InvalidInput("conjugation quandle on an empty subset");
  }
  check_subset(group.order(), subset);
  std::vector<std::int64_t> position(group.order(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    position[subset[i]] = static_cast<std::int64_t>(i);
  }
  std::size_t const n = subset.size();
  std::vector<Element> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Element const p = group.power(subset[i], exponent);
    Element const p_inv = group.inverse(p);
    for (std::size_t j = 0; j < n; ++j) {
      Element const v = group.mul(group.mul(p_inv, subset[j]), p);
      if (position[v] < 0) {
        throw NotClosed("subset is not closed under conjugation",
                        {subset[i], subset[j]});
      }
      flat[i * n + j] = static_cast<Element>(position[v]);
    }
  }
  return validate(n, std::move(flat),
                  "conj_subset(" + group.label() + ","
                      + std::to_string(exponent) + ")");
}

Quandle disjoint_union(Quandle const& q1, Quandle const& q2) {
  std::size_t const n1 = q1.order();
  std::size_t const n = n1 + q2.order();
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Element v = static_cast<Element>(b);
      if (a < n1 && b < n1) {
        v = q1(static_cast<Element>(a), static_cast<Element>(b));
      } else if (a >= n1 && b >= n1) {
        v = static_cast<Element>(
            n1 + q2(static_cast<Element>(a - n1), static_cast<Element>(b - n1)));
      }
      flat[a * n + b] = v;
    }
  }
  return validate(n, std::move(flat),
                  "union(" + q1.label() + "," + q2.label() + ")");
}

Quandle disjoint_union(std::span<Quandle const> parts) {
  if (parts.empty()) {
    throw InvalidInput("disjoint union of no quandles");
  }
  Quandle out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out = disjoint_union(out, parts[i]);
  }
  return out;
}

Quandle direct_product(Quandle const& q1, Quandle const& q2) {
  std::size_t const n1 = q1.order();
  std::size_t const n2 = q2.order();
  std::size_t const n = n1 * n2;
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto const x = q1(static_cast<Element>(a / n2), static_cast<Element>(b / n2));
      auto const y = q2(static_cast<Element>(a % n2), static_cast<Element>(b % n2));
      flat[a * n + b] = static_cast<Element>(x * n2 + y);
    }
  }
  return validate(n, std::move(flat),
                  "product(" + q1.label() + "," + q2.label() + ")");
}

ElementSet subquandle_closure(Quandle const& q, ElementSet const& seed) {
  std::vector<char> in(q.order(), 0);
  ElementSet members;
  auto add = [&](Element x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  for (Element x : seed) {
    if (x >= q.order()) {
      throw InvalidInput("seed element out of range");
    }
    add(x);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    Element const x = members[i];
    for (std::size_t j = 0; j <= i; ++j) {
      Element const y = members[j];
      add(q(x, y));
      add(q(y, x));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_closed(Quandle const& q, ElementSet const& subset) {
  std::vector<char> in(q.order(), 0);
  for (Element x : subset) {
    in[x] = 1;
  }
  for (Element a : subset) {
    for (Element b : subset) {
      if (!in[q(a, b)]) {
        return false;
      }
    }
  }
  return true;
}

Quandle induced_subquandle(Quandle const& q, ElementSet const& subset) {
  check_subset(q.order(), subset);
  if (subset.empty()) {
    throw InvalidInput("induced subquandle on an empty subset");
  }
  std::vector<std::int64_t> position(q.order(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    position[subset[i]] = static_cast<std::int64_t>(i);
  }
  std::size_t const n = subset.size();
  std::vector<Element> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element const v = q(subset[i], subset[j]);
      if (position[v] < 0) {
        throw NotClosed("subset is not a subquandle", {subset[i], subset[j]});
      }
      flat[i * n + j] = static_cast<Element>(position[v]);
    }
  }
  return validate(n, std::move(flat));
}

std::vector<ElementSet> orbits(Quandle const& q) {
  ElementSet all(q.order());
  std::iota(all.begin(), all.end(), Element{0});
  return orbits(q, all);
}

std::vector<ElementSet> orbits(Quandle const& q, ElementSet const& subset) {
  std::vector<std::size_t> position(q.order(), 0);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    position[subset[i]] = i;
  }
  detail::UnionFind uf(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (Element a : subset) {
      uf.unite(i, position[q(a, subset[i])]);
    }
  }
  std::vector<ElementSet> out;
  std::vector<std::size_t> slot(subset.size(), SIZE_MAX);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    std::size_t const root = uf.find(i);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(subset[i]);
  }
  return out;
}

}  // namespace quandle
