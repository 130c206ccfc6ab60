#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "quandle/classify.hpp"
#include "quandle/corpus.hpp"
#include "quandle/error.hpp"
#include "quandle/permgroup.hpp"

using namespace quandle;

namespace {

Permutation perm(std::vector<Element> image) { return Permutation(std::move(image)); }

}  // namespace

TEST_CASE("permutation basics") {
  Permutation const p = perm({1, 2, 0});
  Permutation const q = perm({1, 0, 2});
  CHECK((p * q)(0) == p(q(0)));
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(perm({0, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(perm({0, 3, 1}), InvalidInput);
  // [x, y] = x⁻¹ y⁻¹ x y
  CHECK(commutator(p, q) == p.inverse() * q.inverse() * p * q);
  CHECK(engel_bracket(q, p, 0) == q);
  CHECK(engel_bracket(q, p, 2) == commutator(p, commutator(p, q)));
  Quandle const d3 = dihedral(3);
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b)
      CHECK(Permutation::left_translation(d3, a)(b) == d3(a, b));
}

TEST_CASE("closure sizes") {
  std::vector<Permutation> s4{perm({1, 0, 2, 3}), perm({1, 2, 3, 0})};
  CHECK(closure(4, s4).size() == 24);
  std::vector<Permutation> d8{perm({1, 2, 3, 0}), perm({0, 3, 2, 1})};
  CHECK(closure(4, d8).size() == 8);
  std::vector<Permutation> none;
  CHECK(closure(5, none).size() == 1);
  CHECK_THROWS_AS(closure(4, s4, 10), CapExceeded);
  std::vector<Permutation> wrong{perm({1, 0})};
  CHECK_THROWS_AS(closure(3, wrong), InvalidInput);

  PermGroup const g = closure(4, s4);
  CHECK(g.elements().front().is_identity());
  for (auto const& x : g.elements())
    for (auto const& y : g.elements()) REQUIRE(g.contains(x * y));
}

TEST_CASE("orbits from generators and from elements agree") {
  std::vector<Permutation> gens{perm({1, 0, 2, 3, 4, 5}), perm({0, 1, 3, 4, 2, 5})};
  PermGroup const g = closure(6, gens);
  auto const o = orbits(g);
  CHECK(o == orbits_by_elements(g));
  CHECK(o == std::vector<ElementSet>{{0, 1}, {2, 3, 4}, {5}});
}

TEST_CASE("series of builtin groups match the table-based oracle") {
  for (auto const& name : builtin_group_names()) {
    GroupTable const g = builtin_group(name);
    CAPTURE(name);
    PermGroup const reg = regular_group(g);
    REQUIRE(reg.size() == g.order());
    CHECK(nilpotency_class(reg) == oracle::nilpotency_class(g));
    CHECK(derived_length(reg) == oracle::derived_length(g));
    auto const c = oracle::nilpotency_class(g);
    CHECK(is_abelian(reg) == (c && *c <= 1));
    for (std::size_t n = 1; n <= 4; ++n) {
      CHECK(is_n_engel_subset(reg, reg.elements(), n) == oracle::n_engel_group(g, n));
    }
    CHECK(is_semiregular(reg));
  }
}

TEST_CASE("known invariants of small groups") {
  auto cls = [](std::string const& n) {
    return nilpotency_class(regular_group(builtin_group(n)));
  };
  CHECK(cls("c1-group") == 0u);
  CHECK(cls("c6-group") == 1u);
  CHECK(cls("q8-group") == 2u);
  CHECK(cls("d8-group") == 2u);
  CHECK(cls("d16-group") == 3u);
  CHECK_FALSE(cls("s3-group").has_value());
  CHECK_FALSE(cls("a4-group").has_value());
  CHECK(derived_length(regular_group(builtin_group("s4-group"))) == 3u);
  CHECK(derived_length(regular_group(builtin_group("a4-group"))) == 2u);
  CHECK_FALSE(is_perfect(regular_group(builtin_group("s4-group"))));
  CHECK(is_perfect(regular_group(builtin_group("c1-group"))));

  PermGroup const s3 = regular_group(builtin_group("s3-group"));
  CHECK(lower_central_series(s3).size() == 2);
  CHECK(lower_central_series(s3).back().size() == 3);
  std::vector<Permutation> involution, rotation;
  for (auto const& p : s3.elements()) {
    if (p.is_identity()) continue;
    ((p * p).is_identity() ? involution : rotation).push_back(p);
  }
  CHECK(normal_closure(s3, std::span(involution).first(1)).size() == 6);
  CHECK(normal_closure(s3, std::span(rotation).first(1)).size() == 3);
}

TEST_CASE("Engel subset requires membership") {
  PermGroup const g = closure(3, std::vector<Permutation>{perm({1, 2, 0})});
  std::vector<Permutation> outside{perm({1, 0, 2})};
  CHECK_THROWS_AS(is_n_engel_subset(g, outside, 1), InvalidInput);
}
