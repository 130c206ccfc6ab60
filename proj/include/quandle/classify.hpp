#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quandle/core.hpp"
#include "quandle/group_table.hpp"
#include "quandle/permgroup.hpp"

namespace quandle {

inline constexpr std::size_t kDefaultWorkCap = 100'000'000;

struct Caps {
  std::size_t group = kDefaultGroupCap;
  std::size_t work = kDefaultWorkCap;
  std::size_t congruences = 100'000;
  std::size_t subsets = std::size_t{1} << 20;
};

// ((a ▷ c_1) ▷ ...) ▷ c_n does not depend on a. Decided by pushing the image
// of the whole carrier through every right multiplication sequence, which
// enumerates exactly the values of the identity. Table lookups are counted
// against work_cap (WorkCapExceeded). n >= 1.
bool is_n_reductive(Quandle const& q, std::size_t n,
                    std::size_t work_cap = kDefaultWorkCap);
// Least n with the identity above, or nothing. T_1 has degree 0.
std::optional<std::size_t> reductive_degree_by_identity(
    Quandle const& q, std::size_t work_cap = kDefaultWorkCap);

// The independent ways of computing the reductive degree.
struct ReductivityRoutes {
  std::optional<std::size_t> o_chain;
  std::optional<std::size_t> identity;
  // Nilpotency class of Inn(Q) plus one (0 for T_1).
  std::optional<std::size_t> inn_class;
  // Steps for the L-chain to reach T_1.
  std::optional<std::size_t> l_chain;

  bool agree() const noexcept;
};

ReductivityRoutes reductivity_routes(Quandle const& q, Caps const& caps = {});

// Least n with O^n_Q = 0_Q; throws InconsistentCharacterizations if the other
// routes disagree.
std::optional<std::size_t> reductive_degree(Quandle const& q,
                                            Caps const& caps = {});

// (...((a ▷ b) ▷ b) ...) ▷ b = b with n factors b, for all a, b. n >= 1.
bool is_n_locally_reductive(Quandle const& q, std::size_t n);
std::optional<std::size_t> locally_reductive_degree(Quandle const& q);

bool is_medial(Quandle const& q);
bool is_connected(Quandle const& q);
bool is_faithful(Quandle const& q);

// Routed through Trans(Q): abelian means Trans abelian and semiregular.
bool is_abelian_quandle(Quandle const& q, std::size_t group_cap = kDefaultGroupCap);
bool is_nilpotent_quandle(Quandle const& q,
                          std::size_t group_cap = kDefaultGroupCap);
bool is_solvable_quandle(Quandle const& q,
                         std::size_t group_cap = kDefaultGroupCap);

// Conj(H) ∈ tOS_2, decided by [h,_2 x] = 1 for h ∈ ⟨H⟩, x ∈ H and checked
// against the orbit tree of the conjugation quandle on H.
bool conj_two_engel_check(GroupTable const& group, ElementSet const& subset);

// The left regular representation x ↦ (y ↦ x·y).
std::vector<Permutation> regular_representation(GroupTable const& group);
PermGroup regular_group(GroupTable const& group);

struct ClassificationReport {
  std::string label;
  std::size_t order = 0;
  std::vector<std::size_t> orbit_sizes;  // descending
  bool connected = false;
  bool faithful = false;
  bool medial = false;
  bool abelian = false;
  bool nilpotent_quandle = false;
  bool solvable_quandle = false;
  std::optional<std::size_t> trans_derived_length;
  std::optional<std::size_t> reductive_degree;
  std::optional<std::size_t> locally_reductive_degree;
  std::optional<std::size_t> tos_degree;
  std::size_t os_degree = 0;
  std::optional<bool> ncs;
  std::size_t inn_order = 0;
  std::size_t trans_order = 0;
  std::optional<std::size_t> inn_nilpotency_class;

  bool operator==(ClassificationReport const&) const = default;
};

// Throws InconsistentCharacterizations if the degree ordering
// LR <= tOS <= R fails.
ClassificationReport classify(Quandle const& q, Caps const& caps = {});

}  // namespace quandle
