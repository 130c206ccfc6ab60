#include "quandle/permgroup.hpp"

#include <algorithm>
#include <numeric>

#include "quandle/detail/union_find.hpp"
#include "quandle/error.hpp"

namespace quandle {

Permutation::Permutation(std::vector<Element> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (Element x : image_) {
    if (x >= image_.size() || hit[x]) {
      throw InvalidInput("image is not a bijection");
    }
    hit[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Element> image(degree);
  std::iota(image.begin(), image.end(), Element{0});
  return Permutation(std::move(image), Unchecked{});
}

Permutation Permutation::left_translation(Quandle const& q, Element a) {
  auto row = q.row(a);
  return Permutation(std::vector<Element>(row.begin(), row.end()), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x] != x) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) {
    inv[image_[x]] = static_cast<Element>(x);
  }
  return Permutation(std::move(inv), Unchecked{});
}

Permutation operator*(Permutation const& p, Permutation const& q) {
  if (p.degree() != q.degree()) {
    throw InvalidInput("cannot compose permutations of different degree");
  }
  std::vector<Element> image(q.degree());
  for (std::size_t x = 0; x < image.size(); ++x) {
    image[x] = p.image_[q.image_[x]];
  }
  return Permutation(std::move(image), Permutation::Unchecked{});
}

Permutation commutator(Permutation const& x, Permutation const& y) {
  return x.inverse() * y.inverse() * x * y;
}

Permutation engel_bracket(Permutation const& a, Permutation const& b,
                          std::size_t n) {
  Permutation current = a;
  for (std::size_t i = 0; i < n; ++i) {
    current = commutator(b, current);
  }
  return current;
}

std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Element x : p.image()) {
    h = (h ^ x) * 1099511628211ULL;
  }
  return h;
}

// Grows a materialized group one generator at a time.
class SubgroupBuilder {
 public:
  SubgroupBuilder(std::size_t degree, std::size_t cap) : cap_(cap) {
    group_.degree_ = degree;
    insert(Permutation::identity(degree));
  }

  bool contains(Permutation const& p) const { return group_.contains(p); }

  // Adds p as a generator and re-closes. Returns false if p was already in
  // the group.
  bool add(Permutation const& p) {
    if (contains(p)) {
      return false;
    }
    group_.generators_.push_back(p);
    expand(0);
    return true;
  }

  // Records p as a generator without the membership shortcut, then closes.
  void add_generator_verbatim(Permutation const& p) {
    auto& gens = group_.generators_;
    if (std::find(gens.begin(), gens.end(), p) == gens.end()) {
      gens.push_back(p);
    }
  }

  void close() { expand(0); }

  PermGroup const& group() const noexcept { return group_; }
  PermGroup release() { return std::move(group_); }

 private:
  void insert(Permutation p) {
    if (group_.elements_.size() >= cap_) {
      throw CapExceeded("permutation group closure", cap_);
    }
    group_.index_.emplace(p, group_.elements_.size());
    group_.elements_.push_back(std::move(p));
  }

  void expand(std::size_t from) {
    auto& elements = group_.elements_;
    for (std::size_t i = from; i < elements.size(); ++i) {
      for (std::size_t s = 0; s < group_.generators_.size(); ++s) {
        Permutation h = group_.generators_[s] * elements[i];
        if (!group_.index_.contains(h)) {
          insert(std::move(h));
        }
      }
    }
  }

  PermGroup group_;
  std::size_t cap_;
};

PermGroup closure(std::size_t degree, std::span<Permutation const> generators,
                  std::size_t cap) {
  SubgroupBuilder builder(degree, cap);
  for (auto const& g : generators) {
    if (g.degree() != degree) {
      throw InvalidInput("generator degree " + std::to_string(g.degree())
                         + " differs from group degree "
                         + std::to_string(degree));
    }
    builder.add_generator_verbatim(g);
  }
  builder.close();
  return builder.release();
}

std::vector<ElementSet> orbits(PermGroup const& g) {
  detail::UnionFind uf(g.degree());
  for (auto const& s : g.generators()) {
    for (Element x = 0; x < g.degree(); ++x) {
      uf.unite(x, s(x));
    }
  }
  std::vector<ElementSet> out;
  std::vector<std::size_t> slot(g.degree(), SIZE_MAX);
  for (Element x = 0; x < g.degree(); ++x) {
    std::size_t const root = uf.find(x);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(x);
  }
  return out;
}

std::vector<ElementSet> orbits_by_elements(PermGroup const& g) {
  std::vector<char> done(g.degree(), 0);
  std::vector<ElementSet> out;
  for (Element x = 0; x < g.degree(); ++x) {
    if (done[x]) {
      continue;
    }
    ElementSet orbit;
    for (auto const& h : g.elements()) {
      orbit.push_back(h(x));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (Element y : orbit) {
      done[y] = 1;
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

PermGroup normal_closure(PermGroup const& g, std::span<Permutation const> seeds,
                         std::size_t cap) {
  SubgroupBuilder builder(g.degree(), cap);
  for (auto const& s : seeds) {
    builder.add(s);
  }
  std::vector<Permutation> conjugators;
  for (auto const& t : g.generators()) {
    conjugators.push_back(t.inverse());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < builder.group().generators().size(); ++i) {
      for (std::size_t t = 0; t < conjugators.size(); ++t) {
        Permutation c = conjugators[t] * builder.group().generators()[i]
                        * g.generators()[t];
        changed = builder.add(c) || changed;
      }
    }
  }
  return builder.release();
}

std::vector<PermGroup> lower_central_series(PermGroup const& g) {
  std::vector<PermGroup> series{g};
  while (series.back().size() > 1) {
    std::vector<Permutation> seeds;
    for (auto const& h : series.back().generators()) {
      for (auto const& x : g.generators()) {
        seeds.push_back(commutator(h, x));
      }
    }
    PermGroup next = normal_closure(g, seeds);
    if (next.size() == series.back().size()) {
      break;
    }
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<PermGroup> derived_series(PermGroup const& g) {
  std::vector<PermGroup> series{g};
  while (series.back().size() > 1) {
    PermGroup const& current = series.back();
    std::vector<Permutation> seeds;
    auto const& gens = current.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        seeds.push_back(commutator(gens[i], gens[j]));
      }
    }
    PermGroup next = normal_closure(current, seeds);
    if (next.size() == current.size()) {
      break;
    }
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(PermGroup const& g) {
  auto series = lower_central_series(g);
  if (series.back().size() != 1) {
    return std::nullopt;
  }
  return series.size() - 1;
}

std::optional<std::size_t> derived_length(PermGroup const& g) {
  auto series = derived_series(g);
  if (series.back().size() != 1) {
    return std::nullopt;
  }
  return series.size() - 1;
}

bool is_abelian(PermGroup const& g) {
  auto const& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) {
        return false;
      }
    }
  }
  return true;
}

bool is_n_engel_subset(PermGroup const& g, std::span<Permutation const> subset,
                       std::size_t n) {
  for (auto const& h : subset) {
    if (!g.contains(h)) {
      throw InvalidInput("Engel subset is not contained in the group");
    }
  }
  for (auto const& a : subset) {
    for (auto const& b : subset) {
      if (!engel_bracket(a, b, n).is_identity()) {
        return false;
      }
    }
  }
  return true;
}

bool is_semiregular(PermGroup const& g) {
  for (auto const& h : g.elements()) {
    if (h.is_identity()) {
      continue;
    }
    for (Element x = 0; x < g.degree(); ++x) {
      if (h(x) == x) {
        return false;
      }
    }
  }
  return true;
}

bool is_perfect(PermGroup const& g) {
  auto series = derived_series(g);
  return series.size() == 1;
}

}  // namespace quandle
