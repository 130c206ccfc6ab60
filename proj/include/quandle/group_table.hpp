#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "quandle/core.hpp"

namespace quandle {

// A finite group given by its multiplication table: table[x][y] = x·y.
class GroupTable {
 public:
  // Checks closure, associativity, identity and inverses; throws NotAGroup.
  static GroupTable from_table(Table const& table, std::string label = {});

  std::size_t order() const noexcept { return order_; }
  Element mul(Element x, Element y) const noexcept {
    return table_[x * order_ + y];
  }
  Element identity() const noexcept { return identity_; }
  Element inverse(Element x) const noexcept { return inverse_[x]; }
  // x^k for any integer k.
  Element power(Element x, std::int64_t k) const;

  // Sorted classes, listed by smallest element.
  std::vector<ElementSet> conjugacy_classes() const;

  Table table() const;
  std::string const& label() const noexcept { return label_; }

  bool operator==(GroupTable const&) const = default;

 private:
  GroupTable() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::string label_;
};

}  // namespace quandle
