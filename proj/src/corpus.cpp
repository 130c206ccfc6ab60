#include "quandle/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "quandle/error.hpp"
#include "quandle/permgroup.hpp"

namespace quandle {

namespace {

constexpr Element kUnset = static_cast<Element>(-1);

// Cell-by-cell search. Every assignment re-checks the distributivity
// instances that mention the new cell and are otherwise fully known.
class Enumerator {
 public:
  explicit Enumerator(std::size_t n)
      : n_(n),
        t_(n * n, kUnset),
        inv_(n * n, kUnset),
        used_(n * n, 0) {
    for (Element a = 0; a < n; ++a) {
      set(a, a, a);
    }
  }

  void run(std::function<void(std::vector<Element> const&)> const& emit) {
    emit_ = &emit;
    search(0);
  }

 private:
  Element at(Element a, Element b) const { return t_[a * n_ + b]; }

  void set(Element a, Element b, Element v) {
    t_[a * n_ + b] = v;
    inv_[a * n_ + v] = b;
    used_[a * n_ + v] = 1;
  }

  void unset(Element a, Element b) {
    Element const v = t_[a * n_ + b];
    t_[a * n_ + b] = kUnset;
    inv_[a * n_ + v] = kUnset;
    used_[a * n_ + v] = 0;
  }

  // x ▷ (y ▷ z) = (x ▷ y) ▷ (x ▷ z), or some cell is still unknown.
  bool triple_ok(Element x, Element y, Element z) const {
    Element const yz = at(y, z);
    if (yz == kUnset) return true;
    Element const lhs = at(x, yz);
    if (lhs == kUnset) return true;
    Element const xy = at(x, y);
    Element const xz = at(x, z);
    if (xy == kUnset || xz == kUnset) return true;
    Element const rhs = at(xy, xz);
    return rhs == kUnset || lhs == rhs;
  }

  bool consistent_after(Element a, Element b) const {
    for (Element y = 0; y < n_; ++y) {
      for (Element z = 0; z < n_; ++z) {
        if (!triple_ok(a, y, z)) return false;
      }
    }
    for (Element x = 0; x < n_; ++x) {
      if (!triple_ok(x, a, b)) return false;
      Element const y = inv_[x * n_ + a];
      Element const z = inv_[x * n_ + b];
      if (y != kUnset && z != kUnset && !triple_ok(x, y, z)) return false;
    }
    return true;
  }

  void search(std::size_t cell) {
    while (cell < n_ * n_ && t_[cell] != kUnset) {
      ++cell;
    }
    if (cell == n_ * n_) {
      (*emit_)(t_);
      return;
    }
    auto const a = static_cast<Element>(cell / n_);
    auto const b = static_cast<Element>(cell % n_);
    for (Element v = 0; v < n_; ++v) {
      if (used_[a * n_ + v]) continue;
      set(a, b, v);
      if (consistent_after(a, b)) {
        search(cell + 1);
      }
      unset(a, b);
    }
  }

  std::size_t n_;
  std::vector<Element> t_;
  std::vector<Element> inv_;
  std::vector<char> used_;
  std::function<void(std::vector<Element> const&)> const* emit_ = nullptr;
};

// 1-based rows as printed in the source table.
constexpr int kExample16[16][16] = {
    {1, 2, 4, 3, 5, 6, 7, 8, 11, 12, 9, 10, 15, 16, 13, 14},
    {1, 2, 4, 3, 5, 6, 7, 8, 11, 12, 9, 10, 15, 16, 13, 14},
    {2, 1, 3, 4, 5, 6, 7, 8, 10, 9, 12, 11, 14, 13, 16, 15},
    {2, 1, 3, 4, 5, 6, 7, 8, 10, 9, 12, 11, 14, 13, 16, 15},
    {1, 2, 3, 4, 5, 6, 8, 7, 11, 12, 9, 10, 14, 13, 16, 15},
    {1, 2, 3, 4, 5, 6, 8, 7, 11, 12, 9, 10, 14, 13, 16, 15},
    {1, 2, 3, 4, 6, 5, 7, 8, 10, 9, 12, 11, 15, 16, 13, 14},
    {1, 2, 3, 4, 6, 5, 7, 8, 10, 9, 12, 11, 15, 16, 13, 14},
    {5, 6, 7, 8, 1, 2, 3, 4, 9, 10, 11, 12, 13, 15, 14, 16},
    {6, 5, 7, 8, 2, 1, 3, 4, 9, 10, 11, 12, 16, 14, 15, 13},
    {5, 6, 8, 7, 1, 2, 4, 3, 9, 10, 11, 12, 16, 14, 15, 13},
    {6, 5, 8, 7, 2, 1, 4, 3, 9, 10, 11, 12, 13, 15, 14, 16},
    {7, 8, 5, 6, 3, 4, 1, 2, 9, 11, 10, 12, 13, 14, 15, 16},
    {8, 7, 5, 6, 3, 4, 2, 1, 12, 10, 11, 9, 13, 14, 15, 16},
    {7, 8, 6, 5, 4, 3, 1, 2, 12, 10, 11, 9, 13, 14, 15, 16},
    {8, 7, 6, 5, 4, 3, 2, 1, 9, 11, 10, 12, 13, 14, 15, 16},
};

Permutation cycles(std::size_t degree,
                   std::vector<std::vector<Element>> const& cs) {
  std::vector<Element> image(degree);
  for (Element x = 0; x < degree; ++x) image[x] = x;
  for (auto const& c : cs) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      image[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(image));
}

GroupTable group_from_generators(std::size_t degree,
                                 std::vector<Permutation> const& gens,
                                 std::string label) {
  PermGroup const g = closure(degree, gens);
  auto const& elems = g.elements();
  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index.emplace(elems[i], static_cast<Element>(i));
  }
  Table table(elems.size(), std::vector<Element>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      table[i][j] = index.at(elems[i] * elems[j]);
    }
  }
  return GroupTable::from_table(table, std::move(label));
}

GroupTable cyclic_group(std::size_t n) {
  Table table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i][j] = static_cast<Element>((i + j) % n);
    }
  }
  return GroupTable::from_table(table, "c" + std::to_string(n));
}

// ±1, ±i, ±j, ±k encoded as 4·sign + unit.
GroupTable quaternion_group() {
  constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Table table(8, std::vector<Element>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      int const ux = x % 4, uy = y % 4;
      int const sign = (x / 4 + y / 4 + kSign[ux][uy]) % 2;
      table[x][y] = static_cast<Element>(4 * sign + kUnit[ux][uy]);
    }
  }
  return GroupTable::from_table(table, "q8");
}

using QuandleFactory = std::function<Quandle()>;
using GroupFactory = std::function<GroupTable()>;

std::vector<std::pair<std::string, GroupFactory>> const& group_registry() {
  static std::vector<std::pair<std::string, GroupFactory>> const registry = [] {
    std::vector<std::pair<std::string, GroupFactory>> r;
    for (std::size_t n = 1; n <= 8; ++n) {
      r.emplace_back("c" + std::to_string(n) + "-group",
                     [n] { return cyclic_group(n); });
    }
    r.emplace_back("c2xc2-group", [] {
      return group_from_generators(4, {cycles(4, {{0, 1}}), cycles(4, {{2, 3}})},
                                   "c2xc2");
    });
    r.emplace_back("s3-group", [] {
      return group_from_generators(3, {cycles(3, {{0, 1}}), cycles(3, {{0, 1, 2}})},
                                   "s3");
    });
    r.emplace_back("d8-group", [] {
      return group_from_generators(
          4, {cycles(4, {{0, 1, 2, 3}}), cycles(4, {{1, 3}})}, "d8");
    });
    r.emplace_back("q8-group", [] { return quaternion_group(); });
    r.emplace_back("a4-group", [] {
      return group_from_generators(
          4, {cycles(4, {{0, 1, 2}}), cycles(4, {{0, 1}, {2, 3}})}, "a4");
    });
    r.emplace_back("d16-group", [] {
      return group_from_generators(
          8, {cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}}), cycles(8, {{1, 7}, {2, 6}, {3, 5}})},
          "d16");
    });
    r.emplace_back("s4-group", [] {
      return group_from_generators(
          4, {cycles(4, {{0, 1}}), cycles(4, {{0, 1, 2, 3}})}, "s4");
    });
    return r;
  }();
  return registry;
}

std::vector<std::pair<std::string, QuandleFactory>> const& quandle_registry() {
  static std::vector<std::pair<std::string, QuandleFactory>> const registry = [] {
    std::vector<std::pair<std::string, QuandleFactory>> r;
    r.emplace_back("paper-example-16", [] { return example16(); });
    for (std::size_t n : {1, 2, 3}) {
      r.emplace_back("t" + std::to_string(n), [n] { return trivial(n); });
    }
    for (std::size_t n : {3, 4, 5, 6, 8, 16}) {
      r.emplace_back("d" + std::to_string(n), [n] { return dihedral(n); });
    }
    for (auto [n, t] : std::vector<std::pair<std::size_t, std::int64_t>>{
             {5, 2}, {5, 3}, {7, 3}, {8, 3}, {9, 2}}) {
      r.emplace_back("affine-" + std::to_string(n) + "-" + std::to_string(t),
                     [n, t] { return affine(n, t); });
    }
    r.emplace_back("d4-union-d4", [] {
      return disjoint_union(dihedral(4), dihedral(4));
    });
    for (std::string g : {"s3", "d8", "q8", "a4", "s4"}) {
      r.emplace_back("conj-" + g, [g] { return conj(builtin_group(g + "-group")); });
    }
    r.emplace_back("s3-transpositions", [] {
      GroupTable const s3 = builtin_group("s3-group");
      for (auto const& cls : s3.conjugacy_classes()) {
        if (cls.size() == 3) {
          return conj_subset(s3, cls).with_label("s3-transpositions");
        }
      }
      throw InvalidInput("no class of size 3");
    });
    return r;
  }();
  return registry;
}

}  // namespace

std::vector<Quandle> enumerate_quandles(std::size_t n, std::size_t order_cap) {
  if (n > order_cap) {
    throw CapExceeded("quandle enumeration order", order_cap);
  }
  if (n == 0) {
    return {};
  }
  std::vector<Quandle> accepted;
  std::multimap<std::vector<std::uint64_t>, std::size_t> by_signature;
  Enumerator(n).run([&](std::vector<Element> const& flat) {
    Quandle q = validate(n, flat);
    auto sig = invariant_signature(q);
    auto [lo, hi] = by_signature.equal_range(sig);
    for (auto it = lo; it != hi; ++it) {
      if (is_isomorphic(accepted[it->second], q)) {
        return;
      }
    }
    std::string label = "enum(" + std::to_string(n) + ","
                        + std::to_string(accepted.size() + 1) + ")";
    by_signature.emplace(std::move(sig), accepted.size());
    accepted.push_back(q.with_label(std::move(label)));
  });
  return accepted;
}

Quandle example16() {
  Table table(16, std::vector<Element>(16));
  for (std::size_t a = 0; a < 16; ++a) {
    for (std::size_t b = 0; b < 16; ++b) {
      table[a][b] = static_cast<Element>(kExample16[a][b] - 1);
    }
  }
  return validate(table, "paper-example-16");
}

Builtin builtin(std::string const& name) {
  for (auto const& [key, make] : quandle_registry()) {
    if (key == name) {
      Quandle q = make();
      return q.label().empty() ? q.with_label(name) : q;
    }
  }
  for (auto const& [key, make] : group_registry()) {
    if (key == name) {
      return make();
    }
  }
  throw UnknownName("unknown builtin '" + name + "'");
}

Quandle builtin_quandle(std::string const& name) {
  auto b = builtin(name);
  if (auto* q = std::get_if<Quandle>(&b)) {
    return std::move(*q);
  }
  throw UnknownName("'" + name + "' is a group, not a quandle");
}

GroupTable builtin_group(std::string const& name) {
  auto b = builtin(name);
  if (auto* g = std::get_if<GroupTable>(&b)) {
    return std::move(*g);
  }
  throw UnknownName("'" + name + "' is a quandle, not a group");
}

std::vector<std::string> builtin_quandle_names() {
  std::vector<std::string> out;
  for (auto const& entry : quandle_registry()) out.push_back(entry.first);
  return out;
}

std::vector<std::string> builtin_group_names() {
  std::vector<std::string> out;
  for (auto const& entry : group_registry()) out.push_back(entry.first);
  return out;
}

Corpus build_corpus(CorpusSpec const& spec) {
  Corpus corpus;
  for (std::size_t n = 1; n <= spec.exhaustive_up_to; ++n) {
    auto found = enumerate_quandles(n);
    corpus.quandles.insert(corpus.quandles.end(), found.begin(), found.end());
  }
  if (spec.include_builtins) {
    for (auto const& name : builtin_quandle_names()) {
      corpus.quandles.push_back(builtin_quandle(name));
    }
    for (auto const& name : builtin_group_names()) {
      corpus.groups.push_back(builtin_group(name));
    }
  }
  for (std::size_t k = 0, n = 1; k <= spec.dihedral_tower_up_to; ++k, n *= 2) {
    Quandle d = dihedral(n);
    bool const present = std::any_of(
        corpus.quandles.begin(), corpus.quandles.end(),
        [&](Quandle const& q) { return q.label() == d.label(); });
    if (!present) corpus.quandles.push_back(std::move(d));
  }
  return corpus;
}

}  // namespace quandle
