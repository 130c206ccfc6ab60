#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "quandle/core.hpp"

namespace quandle {

// A bijection of {0, ..., n−1}.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidInput unless image is a bijection.
  explicit Permutation(std::vector<Element> image);

  static Permutation identity(std::size_t degree);
  // The left translation L_a of a quandle.
  static Permutation left_translation(Quandle const& q, Element a);

  std::size_t degree() const noexcept { return image_.size(); }
  Element operator()(Element x) const noexcept { return image_[x]; }
  std::span<Element const> image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  bool operator==(Permutation const&) const = default;
  auto operator<=>(Permutation const&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Element> image, Unchecked) : image_(std::move(image)) {}
  friend Permutation operator*(Permutation const&, Permutation const&);

  std::vector<Element> image_;
};

// Composition: (p * q)(x) = p(q(x)).
Permutation operator*(Permutation const& p, Permutation const& q);

// [x, y] = x⁻¹ y⁻¹ x y
Permutation commutator(Permutation const& x, Permutation const& y);

// [b,_0 a] = a, [b,_{n+1} a] = [b, [b,_n a]]
Permutation engel_bracket(Permutation const& a, Permutation const& b,
                          std::size_t n);

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept;
};

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

// A permutation group with every element materialized.
class PermGroup {
 public:
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::vector<Permutation> const& generators() const noexcept {
    return generators_;
  }
  // BFS order: identity first, then words by generator index and left
  // multiplication.
  std::vector<Permutation> const& elements() const noexcept {
    return elements_;
  }
  bool contains(Permutation const& p) const {
    return index_.contains(p);
  }

 private:
  friend PermGroup closure(std::size_t, std::span<Permutation const>,
                           std::size_t);
  friend class SubgroupBuilder;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

// Throws CapExceeded if the group has more than cap elements and
// InvalidInput if a generator has the wrong degree.
PermGroup closure(std::size_t degree, std::span<Permutation const> generators,
                  std::size_t cap = kDefaultGroupCap);

// Orbits of the group on {0, ..., degree−1}, from generator edges only.
std::vector<ElementSet> orbits(PermGroup const& g);
// Same partition computed from the full element list.
std::vector<ElementSet> orbits_by_elements(PermGroup const& g);

// Smallest normal subgroup of g containing the seeds.
PermGroup normal_closure(PermGroup const& g, std::span<Permutation const> seeds,
                         std::size_t cap = kDefaultGroupCap);

// Terms of the lower central series γ_1 = G, γ_{i+1} = [γ_i, G], until it
// stabilizes (the last entry repeats no earlier one).
std::vector<PermGroup> lower_central_series(PermGroup const& g);
// G, G', G'', ... until it stabilizes.
std::vector<PermGroup> derived_series(PermGroup const& g);

// Least c with γ_{c+1} = 1, or nothing if G is not nilpotent.
std::optional<std::size_t> nilpotency_class(PermGroup const& g);
// Least d with G^{(d)} = 1, or nothing if G is not solvable.
std::optional<std::size_t> derived_length(PermGroup const& g);

bool is_abelian(PermGroup const& g);
// [b,_n a] = 1 for all a, b in the subset. Throws InvalidInput unless
// every element of the subset lies in g.
bool is_n_engel_subset(PermGroup const& g, std::span<Permutation const> subset,
                       std::size_t n);
// Only the identity fixes a point.
bool is_semiregular(PermGroup const& g);
bool is_perfect(PermGroup const& g);

}  // namespace quandle
