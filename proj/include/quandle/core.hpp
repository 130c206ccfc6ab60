#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace quandle {

// Carrier elements are always 0-based contiguous indices.
using Element = std::uint32_t;
// Sorted, duplicate-free list of carrier elements.
using ElementSet = std::vector<Element>;
// Row-major square table; table[a][b] = a ▷ b, so row a is L_a.
using Table = std::vector<std::vector<Element>>;

class GroupTable;

// A finite quandle given by its left-translation table. Instances can only
// be obtained through validate() (or constructors that call it), so every
// Quandle value satisfies the three axioms.
class Quandle {
 public:
  std::size_t order() const noexcept { return order_; }

  // a ▷ b
  Element operator()(Element a, Element b) const noexcept {
    return table_[a * order_ + b];
  }

  // The unique x with a ▷ x = c.
  Element left_div(Element a, Element c) const noexcept {
    return left_div_[a * order_ + c];
  }

  std::span<Element const> row(Element a) const noexcept {
    return {table_.data() + a * order_, order_};
  }

  std::span<Element const> flat() const noexcept { return table_; }
  Table table() const;

  std::string const& label() const noexcept { return label_; }
  Quandle with_label(std::string label) const;

  // Value equality; the label takes part.
  bool operator==(Quandle const&) const = default;
  bool same_table(Quandle const& other) const noexcept {
    return table_ == other.table_;
  }

 private:
  Quandle(std::size_t order, std::vector<Element> table, std::string label);

  friend Quandle validate(std::size_t, std::vector<Element>, std::string);

  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> left_div_;
  std::string label_;
};

// Checks the shape, then idempotence (axiom 1), bijective rows (axiom 2) and
// left self-distributivity (axiom 3), reporting the first failing instance
// in that order as AxiomViolation. Shape errors raise InvalidInput.
Quandle validate(Table const& table, std::string label = {});
Quandle validate(std::size_t order, std::vector<Element> flat,
                 std::string label = {});

Quandle trivial(std::size_t n);
// x ▷ y = t(y − x) + x mod n; requires gcd(t, n) = 1.
Quandle affine(std::size_t n, std::int64_t t);
// x ▷ y = 2x − y mod n.
Quandle dihedral(std::size_t n);
// x ▷ y = x^{−k} y x^k on the whole group.
Quandle conj(GroupTable const& group, std::int64_t exponent = 1);
// The induced quandle on a subset of the group; element i of the result is
// subset[i] (after sorting). Throws NotClosed if the subset is not closed
// under the operation.
Quandle conj_subset(GroupTable const& group, ElementSet subset,
                    std::int64_t exponent = 1);

// Blocks act trivially on each other; Q2's elements are shifted by |Q1|.
Quandle disjoint_union(Quandle const& q1, Quandle const& q2);
Quandle disjoint_union(std::span<Quandle const> parts);
// (a1, a2) is encoded as a1 * |Q2| + a2.
Quandle direct_product(Quandle const& q1, Quandle const& q2);

// Smallest subset containing seed closed under ▷ (closure under left
// division follows for finite subsets).
ElementSet subquandle_closure(Quandle const& q, ElementSet const& seed);
bool is_closed(Quandle const& q, ElementSet const& subset);
// Element i of the result is subset[i]. Throws NotClosed.
Quandle induced_subquandle(Quandle const& q, ElementSet const& subset);

// Orbits of Inn(Q) acting on Q, each sorted, listed by smallest element.
std::vector<ElementSet> orbits(Quandle const& q);
// Orbits of the induced quandle on a closed subset.
std::vector<ElementSet> orbits(Quandle const& q, ElementSet const& subset);

struct Isomorphism {
  std::vector<Element> map;
  bool operator==(Isomorphism const&) const = default;
};

bool is_isomorphism(Quandle const& from, Quandle const& to,
                    std::span<Element const> map);
// Backtracking search pruned by orbit size, cycle type of L_a and the number
// of right-fixers of each element.
std::optional<Isomorphism> is_isomorphic(Quandle const& q1,
                                         Quandle const& q2);

// Isomorphism-invariant fingerprint used for fast rejection.
std::vector<std::uint64_t> invariant_signature(Quandle const& q);

}  // namespace quandle
