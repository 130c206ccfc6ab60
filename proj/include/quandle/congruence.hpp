#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "quandle/core.hpp"
#include "quandle/permgroup.hpp"

namespace quandle {

// A partition of {0, ..., n−1} in canonical form: classes are sorted and
// numbered by their smallest element.
class Partition {
 public:
  Partition() = default;
  // Throws InvalidInput unless the classes partition {0, ..., n−1}.
  Partition(std::size_t n, std::vector<ElementSet> classes);
  static Partition from_labels(std::span<std::size_t const> labels);
  static Partition discrete(std::size_t n);
  static Partition full(std::size_t n);

  std::size_t carrier_size() const noexcept { return class_of_.size(); }
  std::size_t size() const noexcept { return classes_.size(); }
  std::size_t class_of(Element x) const noexcept { return class_of_[x]; }
  std::vector<ElementSet> const& classes() const noexcept { return classes_; }
  ElementSet const& class_containing(Element x) const {
    return classes_[class_of_[x]];
  }
  bool related(Element a, Element b) const noexcept {
    return class_of_[a] == class_of_[b];
  }
  // Every class of this partition lies inside a class of other.
  bool refines(Partition const& other) const;
  bool is_discrete() const noexcept { return size() == carrier_size(); }
  bool is_full() const noexcept { return size() == 1; }

  bool operator==(Partition const&) const = default;
  auto operator<=>(Partition const& other) const {
    return class_of_ <=> other.class_of_;
  }

 private:
  std::vector<std::size_t> class_of_;
  std::vector<ElementSet> classes_;
};

// A partition verified to be a congruence of some quandle.
class Congruence {
 public:
  // Throws NotACongruence.
  static Congruence verify(Quandle const& q, Partition partition);
  static Congruence identity(Quandle const& q);
  static Congruence full(Quandle const& q);

  Partition const& partition() const noexcept { return partition_; }
  std::size_t size() const noexcept { return partition_.size(); }
  std::size_t carrier_size() const noexcept {
    return partition_.carrier_size();
  }
  std::size_t class_of(Element x) const noexcept {
    return partition_.class_of(x);
  }
  std::vector<ElementSet> const& classes() const noexcept {
    return partition_.classes();
  }
  bool related(Element a, Element b) const noexcept {
    return partition_.related(a, b);
  }
  bool refines(Congruence const& other) const {
    return partition_.refines(other.partition_);
  }

  bool operator==(Congruence const&) const = default;

 private:
  explicit Congruence(Partition p) : partition_(std::move(p)) {}
  Partition partition_;
};

struct CongruenceWitness {
  // 1: a α b, c α d but (a ▷ c) not α (b ▷ d).
  // 2: a α b, c α d but L_a⁻¹(c) not α L_b⁻¹(d).
  int condition;
  Element a, b, c, d;
};

struct CongruenceCheck {
  bool holds;
  std::optional<CongruenceWitness> witness;
  explicit operator bool() const noexcept { return holds; }
};

CongruenceCheck is_congruence(Quandle const& q, Partition const& partition);

// Least congruence relating every given pair.
Congruence congruence_generated(
    Quandle const& q, std::span<std::pair<Element, Element> const> pairs);
Congruence join(Quandle const& q, Congruence const& alpha,
                Congruence const& beta);

inline constexpr std::size_t kDefaultCongruenceCap = 100'000;

// Con(Q) by closing the principal congruences under joins. Sorted finest
// first (by number of classes, then canonical labels). Throws CapExceeded.
std::vector<Congruence> all_congruences(Quandle const& q,
                                        std::size_t cap = kDefaultCongruenceCap);
// Con(Q) by testing every set partition; intended as a cross-check for small
// carriers. Throws CapExceeded if more than cap partitions would be scanned.
std::vector<Congruence> all_congruences_by_scan(Quandle const& q,
                                                std::size_t cap = 1'000'000);

struct Quotient {
  Quandle quandle;
  // Element of Q ↦ class index in the quotient.
  std::vector<Element> projection;
};

// [a] ▷ [b] = [a ▷ b] on class indices. Throws NotACongruence if the
// congruence belongs to a quandle of a different order.
Quotient quotient(Quandle const& q, Congruence const& c);

PermGroup inn(Quandle const& q, std::size_t cap = kDefaultGroupCap);
// Generated by L_a L_r⁻¹ for a fixed r, which gives the same group as all
// L_a L_b⁻¹.
PermGroup trans(Quandle const& q, std::size_t cap = kDefaultGroupCap);
// Generated by L_a L_r⁻¹ with r the smallest element of the class of a.
PermGroup trans_rel(Quandle const& q, Congruence const& alpha,
                    std::size_t cap = kDefaultGroupCap);

// Orbits of a normal subgroup N of Inn(Q). Checks that conjugates of N's
// generators by every L_a lie in N (NotNormal) and that the orbit partition
// is a congruence (NotACongruence).
Congruence orbit_congruence(Quandle const& q, PermGroup const& n);

// x λ y iff L_x = L_y.
Congruence lambda(Quandle const& q);

// L_0 = Q, L_{k+1} = L_k / λ; stops once the order stops dropping.
std::vector<Quandle> l_chain(Quandle const& q);

// O⁰ = 1_Q, O^{k+1} = orbits of Trans relative to O^k; stops before the
// first repeat.
struct OChain {
  std::vector<Congruence> members;
  // Index of the first member equal to 0_Q, if any.
  std::optional<std::size_t> reaches_identity_at() const;
};
OChain o_chain(Quandle const& q, std::size_t cap = kDefaultGroupCap);

}  // namespace quandle
