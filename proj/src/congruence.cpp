#include "quandle/congruence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quandle/detail/union_find.hpp"
#include "quandle/error.hpp"

namespace quandle {

namespace {

Partition partition_of(detail::UnionFind& uf) {
  std::vector<std::size_t> labels(uf.size());
  for (std::size_t x = 0; x < uf.size(); ++x) {
    labels[x] = uf.find(x);
  }
  return Partition::from_labels(labels);
}

// Merges until the relation in uf is compatible with ▷ and left division in
// both arguments; every merge is forced, so the result is the least such.
void close_under_operations(Quandle const& q, detail::UnionFind& uf) {
  std::size_t const n = q.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x = 0; x < n; ++x) {
      auto const r = static_cast<Element>(uf.find(x));
      if (r == x) {
        continue;
      }
      for (Element c = 0; c < n; ++c) {
        changed = uf.unite(q(x, c), q(r, c)) || changed;
        changed = uf.unite(q(c, x), q(c, r)) || changed;
        changed = uf.unite(q.left_div(x, c), q.left_div(r, c)) || changed;
        changed = uf.unite(q.left_div(c, x), q.left_div(c, r)) || changed;
      }
    }
  }
}

std::string describe(CongruenceWitness const& w) {
  return "condition " + std::to_string(w.condition) + " fails at (a,b,c,d)=("
         + std::to_string(w.a) + "," + std::to_string(w.b) + ","
         + std::to_string(w.c) + "," + std::to_string(w.d) + ")";
}

}  // namespace

Partition::Partition(std::size_t n, std::vector<ElementSet> classes)
    : class_of_(n, SIZE_MAX) {
  for (auto& cls : classes) {
    if (cls.empty()) {
      throw InvalidInput("partition has an empty class");
    }
    std::sort(cls.begin(), cls.end());
  }
  std::sort(classes.begin(), classes.end(),
            [](ElementSet const& x, ElementSet const& y) { return x[0] < y[0]; });
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (Element x : classes[i]) {
      if (x >= n || class_of_[x] != SIZE_MAX) {
        throw InvalidInput("classes do not partition the carrier");
      }
      class_of_[x] = i;
    }
  }
  if (std::find(class_of_.begin(), class_of_.end(), SIZE_MAX)
      != class_of_.end()) {
    throw InvalidInput("classes do not cover the carrier");
  }
  classes_ = std::move(classes);
}

Partition Partition::from_labels(std::span<std::size_t const> labels) {
  std::map<std::size_t, std::size_t> slot;
  std::vector<ElementSet> classes;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, fresh] = slot.try_emplace(labels[x], classes.size());
    if (fresh) {
      classes.emplace_back();
    }
    classes[it->second].push_back(static_cast<Element>(x));
  }
  return Partition(labels.size(), std::move(classes));
}

Partition Partition::discrete(std::size_t n) {
  std::vector<ElementSet> classes(n);
  for (std::size_t x = 0; x < n; ++x) {
    classes[x] = {static_cast<Element>(x)};
  }
  return Partition(n, std::move(classes));
}

Partition Partition::full(std::size_t n) {
  ElementSet all(n);
  for (std::size_t x = 0; x < n; ++x) {
    all[x] = static_cast<Element>(x);
  }
  return Partition(n, {std::move(all)});
}

bool Partition::refines(Partition const& other) const {
  for (auto const& cls : classes_) {
    for (Element x : cls) {
      if (!other.related(x, cls.front())) {
        return false;
      }
    }
  }
  return true;
}

Congruence Congruence::verify(Quandle const& q, Partition partition) {
  auto check = is_congruence(q, partition);
  if (!check) {
    throw NotACongruence("partition is not a congruence: "
                         + describe(*check.witness));
  }
  return Congruence(std::move(partition));
}

Congruence Congruence::identity(Quandle const& q) {
  return Congruence(Partition::discrete(q.order()));
}

Congruence Congruence::full(Quandle const& q) {
  return Congruence(Partition::full(q.order()));
}

CongruenceCheck is_congruence(Quandle const& q, Partition const& partition) {
  if (partition.carrier_size() != q.order()) {
    throw InvalidInput("partition and quandle have different carriers");
  }
  std::size_t const n = q.order();
  auto fail = [](int condition, Element a, Element b, Element c, Element d) {
    return CongruenceCheck{false, CongruenceWitness{condition, a, b, c, d}};
  };
  // Comparing each element with its class minimum suffices by transitivity.
  for (int condition = 1; condition <= 2; ++condition) {
    for (Element a = 0; a < n; ++a) {
      Element const r = partition.class_containing(a).front();
      if (r == a) {
        continue;
      }
      for (Element c = 0; c < n; ++c) {
        if (condition == 1) {
          if (!partition.related(q(a, c), q(r, c))) {
            return fail(1, a, r, c, c);
          }
          if (!partition.related(q(c, a), q(c, r))) {
            return fail(1, c, c, a, r);
          }
        } else {
          if (!partition.related(q.left_div(a, c), q.left_div(r, c))) {
            return fail(2, a, r, c, c);
          }
          if (!partition.related(q.left_div(c, a), q.left_div(c, r))) {
            return fail(2, c, c, a, r);
          }
        }
      }
    }
  }
  return CongruenceCheck{true, std::nullopt};
}

Congruence congruence_generated(
    Quandle const& q, std::span<std::pair<Element, Element> const> pairs) {
  detail::UnionFind uf(q.order());
  for (auto [a, b] : pairs) {
    if (a >= q.order() || b >= q.order()) {
      throw InvalidInput("pair element out of range");
    }
    uf.unite(a, b);
  }
  close_under_operations(q, uf);
  return Congruence::verify(q, partition_of(uf));
}

Congruence join(Quandle const& q, Congruence const& alpha,
                Congruence const& beta) {
  detail::UnionFind uf(q.order());
  for (auto const* c : {&alpha, &beta}) {
    for (auto const& cls : c->classes()) {
      for (Element x : cls) {
        uf.unite(x, cls.front());
      }
    }
  }
  close_under_operations(q, uf);
  return Congruence::verify(q, partition_of(uf));
}

namespace {

void sort_finest_first(std::vector<Congruence>& list) {
  std::sort(list.begin(), list.end(),
            [](Congruence const& x, Congruence const& y) {
              if (x.size() != y.size()) {
                return x.size() > y.size();
              }
              return x.partition() < y.partition();
            });
}

}  // namespace

std::vector<Congruence> all_congruences(Quandle const& q, std::size_t cap) {
  std::size_t const n = q.order();
  std::set<Partition> seen;
  std::vector<Congruence> principal;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      std::pair<Element, Element> const pair{a, b};
      Congruence c = congruence_generated(q, std::span(&pair, 1));
      if (seen.insert(c.partition()).second) {
        principal.push_back(std::move(c));
      }
    }
  }
  seen.clear();
  std::vector<Congruence> out{Congruence::identity(q)};
  seen.insert(out.front().partition());
  for (auto const& p : principal) {
    std::size_t const existing = out.size();
    for (std::size_t i = 0; i < existing; ++i) {
      Congruence j = join(q, out[i], p);
      if (seen.insert(j.partition()).second) {
        if (out.size() >= cap) {
          throw CapExceeded("congruence lattice enumeration", cap);
        }
        out.push_back(std::move(j));
      }
    }
  }
  sort_finest_first(out);
  return out;
}

std::vector<Congruence> all_congruences_by_scan(Quandle const& q,
                                                std::size_t cap) {
  std::size_t const n = q.order();
  // Restricted growth strings enumerate every set partition exactly once.
  std::vector<std::size_t> labels(n, 0);
  std::vector<std::size_t> max_prefix(n, 0);
  std::vector<Congruence> out;
  std::size_t scanned = 0;
  while (true) {
    if (++scanned > cap) {
      throw CapExceeded("set partition scan", cap);
    }
    Partition p = Partition::from_labels(labels);
    if (is_congruence(q, p)) {
      out.push_back(Congruence::verify(q, std::move(p)));
    }
    // Next restricted growth string.
    bool advanced = false;
    for (std::size_t i = n; i-- > 1;) {
      if (labels[i] <= max_prefix[i - 1]) {
        ++labels[i];
        max_prefix[i] = std::max(max_prefix[i - 1], labels[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          labels[j] = 0;
          max_prefix[j] = max_prefix[i];
        }
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      break;
    }
  }
  sort_finest_first(out);
  return out;
}

Quotient quotient(Quandle const& q, Congruence const& c) {
  if (c.carrier_size() != q.order()) {
    throw NotACongruence("congruence belongs to a quandle of another order");
  }
  std::size_t const m = c.size();
  std::vector<Element> flat(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    Element const a = c.classes()[i].front();
    for (std::size_t j = 0; j < m; ++j) {
      Element const b = c.classes()[j].front();
      flat[i * m + j] = static_cast<Element>(c.class_of(q(a, b)));
    }
  }
  std::vector<Element> projection(q.order());
  for (Element x = 0; x < q.order(); ++x) {
    projection[x] = static_cast<Element>(c.class_of(x));
  }
  std::string label = q.label().empty() ? std::string{} : q.label() + "/~";
  return Quotient{validate(m, std::move(flat), std::move(label)),
                  std::move(projection)};
}

PermGroup inn(Quandle const& q, std::size_t cap) {
  std::vector<Permutation> gens;
  for (Element a = 0; a < q.order(); ++a) {
    gens.push_back(Permutation::left_translation(q, a));
  }
  return closure(q.order(), gens, cap);
}

namespace {

PermGroup transvections(Quandle const& q,
                        std::vector<std::pair<Element, Element>> const& pairs,
                        std::size_t cap) {
  std::vector<Permutation> gens;
  for (auto [a, r] : pairs) {
    Permutation g = Permutation::left_translation(q, a)
                    * Permutation::left_translation(q, r).inverse();
    if (!g.is_identity()) {
      gens.push_back(std::move(g));
    }
  }
  return closure(q.order(), gens, cap);
}

}  // namespace

PermGroup trans(Quandle const& q, std::size_t cap) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 1; a < q.order(); ++a) {
    pairs.emplace_back(a, 0);
  }
  return transvections(q, pairs, cap);
}

PermGroup trans_rel(Quandle const& q, Congruence const& alpha,
                    std::size_t cap) {
  std::vector<std::pair<Element, Element>> pairs;
  for (auto const& cls : alpha.classes()) {
    for (std::size_t i = 1; i < cls.size(); ++i) {
      pairs.emplace_back(cls[i], cls.front());
    }
  }
  return transvections(q, pairs, cap);
}

Congruence orbit_congruence(Quandle const& q, PermGroup const& n) {
  if (n.degree() != q.order()) {
    throw InvalidInput("group degree differs from quandle order");
  }
  for (auto const& s : n.generators()) {
    for (Element a = 0; a < q.order(); ++a) {
      Permutation const la = Permutation::left_translation(q, a);
      if (!n.contains(la.inverse() * s * la)) {
        throw NotNormal("subgroup is not normal in Inn(Q): conjugate of a "
                        "generator by L_"
                        + std::to_string(a) + " is missing");
      }
    }
  }
  std::vector<std::size_t> labels(q.order());
  for (auto const& orbit : orbits(n)) {
    for (Element x : orbit) {
      labels[x] = orbit.front();
    }
  }
  return Congruence::verify(q, Partition::from_labels(labels));
}

Congruence lambda(Quandle const& q) {
  std::map<std::vector<Element>, std::size_t> rows;
  std::vector<std::size_t> labels(q.order());
  for (Element a = 0; a < q.order(); ++a) {
    auto r = q.row(a);
    auto [it, fresh] =
        rows.try_emplace(std::vector<Element>(r.begin(), r.end()), a);
    labels[a] = it->second;
  }
  return Congruence::verify(q, Partition::from_labels(labels));
}

std::vector<Quandle> l_chain(Quandle const& q) {
  std::vector<Quandle> chain{q};
  while (true) {
    Congruence const l = lambda(chain.back());
    if (l.partition().is_discrete()) {
      break;
    }
    chain.push_back(quotient(chain.back(), l).quandle);
  }
  return chain;
}

std::optional<std::size_t> OChain::reaches_identity_at() const {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].partition().is_discrete()) {
      return i;
    }
  }
  return std::nullopt;
}

OChain o_chain(Quandle const& q, std::size_t cap) {
  OChain chain;
  chain.members.push_back(Congruence::full(q));
  while (true) {
    Congruence next = orbit_congruence(q, trans_rel(q, chain.members.back(), cap));
    if (next == chain.members.back()) {
      break;
    }
    chain.members.push_back(std::move(next));
  }
  return chain;
}

}  // namespace quandle
