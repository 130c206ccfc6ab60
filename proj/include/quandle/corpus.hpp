#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "quandle/core.hpp"
#include "quandle/group_table.hpp"

namespace quandle {

inline constexpr std::size_t kEnumerationOrderCap = 6;

// All quandles of order n up to isomorphism, in discovery order. Tables are
// filled cell by cell with the axioms checked as soon as the cells they
// mention are known; isomorphs are rejected afterwards.
std::vector<Quandle> enumerate_quandles(std::size_t n,
                                        std::size_t order_cap = kEnumerationOrderCap);

// The 16-element quandle whose orbits are {0..7}, {8..11}, {12..15}; 2-locally
// reductive, in tOS_3 but not tOS_2, 5-reductive but not 3-reductive.
Quandle example16();

using Builtin = std::variant<Quandle, GroupTable>;

// Throws UnknownName.
Builtin builtin(std::string const& name);
Quandle builtin_quandle(std::string const& name);
GroupTable builtin_group(std::string const& name);

std::vector<std::string> builtin_quandle_names();
std::vector<std::string> builtin_group_names();

struct CorpusSpec {
  // Every quandle of order 1..exhaustive_up_to (0 for none).
  std::size_t exhaustive_up_to = 0;
  bool include_builtins = true;
  // dihedral(2^k) for k = 0..dihedral_tower_up_to.
  std::size_t dihedral_tower_up_to = 4;
};

struct Corpus {
  std::vector<Quandle> quandles;
  std::vector<GroupTable> groups;
};

Corpus build_corpus(CorpusSpec const& spec);

}  // namespace quandle
