#include <catch2/catch_amalgamated.hpp>

#include <variant>

#include "oracles.hpp"
#include "quandle/classify.hpp"
#include "quandle/corpus.hpp"
#include "quandle/error.hpp"

using namespace quandle;

namespace {

// Every table whose rows are permutations fixing the diagonal, filtered by
// the naive axiom check and bucketed by brute-force isomorphism.
std::size_t classes_by_full_scan(std::size_t n, std::vector<Quandle> const& enumerated) {
  std::vector<std::vector<std::vector<Element>>> rows(n);
  for (Element a = 0; a < n; ++a) {
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), Element{0});
    do {
      if (p[a] == a) rows[a].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<Quandle> reps;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    oracle::Flat flat;
    for (Element a = 0; a < n; ++a)
      flat.insert(flat.end(), rows[a][pick[a]].begin(), rows[a][pick[a]].end());
    if (oracle::is_quandle(n, flat)) {
      Quandle const q = validate(n, flat);
      bool seen = false;
      for (auto const& r : reps) seen = seen || oracle::isomorphic(r, q);
      if (!seen) {
        reps.push_back(q);
        std::size_t matches = 0;
        for (auto const& e : enumerated) matches += oracle::isomorphic(e, q) ? 1 : 0;
        REQUIRE(matches == 1);
      }
    }
    std::size_t i = 0;
    while (i < n && ++pick[i] == rows[i].size()) pick[i++] = 0;
    if (i == n) break;
  }
  return reps.size();
}

}  // namespace

TEST_CASE("enumeration counts") {
  std::vector<std::size_t> const expected{1, 1, 3, 7, 22};
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const qs = enumerate_quandles(n);
    CHECK(qs.size() == expected[n - 1]);
    for (auto const& q : qs) {
      CHECK(q.order() == n);
      CHECK(oracle::is_quandle(n, {q.flat().begin(), q.flat().end()}));
    }
  }
  CHECK(enumerate_quandles(0).empty());
  CHECK_THROWS_AS(enumerate_quandles(7), CapExceeded);
}

TEST_CASE("enumeration at order 6 is duplicate-free", "[slow]") {
  auto const qs = enumerate_quandles(6);
  CHECK(qs.size() == 73);
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j)
      REQUIRE_FALSE(is_isomorphic(qs[i], qs[j]).has_value());
}

TEST_CASE("enumeration is duplicate-free up to order 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const qs = enumerate_quandles(n);
    for (std::size_t i = 0; i < qs.size(); ++i)
      for (std::size_t j = i + 1; j < qs.size(); ++j)
        REQUIRE_FALSE(oracle::isomorphic(qs[i], qs[j]));
  }
}

TEST_CASE("enumeration is complete up to order 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const qs = enumerate_quandles(n);
    CHECK(classes_by_full_scan(n, qs) == qs.size());
  }
}

TEST_CASE("order 3 contains T_3 and D_3") {
  auto const qs = enumerate_quandles(3);
  auto contains = [&](Quandle const& x) {
    return std::any_of(qs.begin(), qs.end(),
                       [&](Quandle const& q) { return oracle::isomorphic(q, x); });
  };
  CHECK(contains(trivial(3)));
  CHECK(contains(dihedral(3)));
}

TEST_CASE("16-element example transcription") {
  Quandle const e = builtin_quandle("paper-example-16");
  REQUIRE(e.order() == 16);
  // FNV-1a style digest and a weighted sum of the 1-based table.
  std::uint64_t h = 1469598103934665603ULL;
  std::uint64_t weighted = 0;
  for (Element a = 0; a < 16; ++a)
    for (Element b = 0; b < 16; ++b) {
      std::uint64_t const v = e(a, b) + 1;
      h ^= v;
      h *= 1099511628211ULL;
      weighted += (a + 1) * (b + 1) * v;
    }
  CHECK(h == 11362010767486414259ULL);
  CHECK(weighted == 195044);

  auto const o = orbits(e);
  REQUIRE(o.size() == 3);
  CHECK(o[0] == ElementSet{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(o[1] == ElementSet{8, 9, 10, 11});
  CHECK(o[2] == ElementSet{12, 13, 14, 15});
  CHECK(is_isomorphic(induced_subquandle(e, o[0]),
                      disjoint_union(dihedral(4), dihedral(4)))
            .has_value());
}

TEST_CASE("builtin registry") {
  CHECK(builtin_quandle("t1").same_table(trivial(1)));
  CHECK(builtin_quandle("d4").same_table(dihedral(4)));
  GroupTable const q8 = builtin_group("q8-group");
  CHECK(q8.order() == 8);
  CHECK(nilpotency_class(regular_group(q8)) == 2u);
  // Q_8 has a single involution.
  std::size_t involutions = 0;
  for (Element x = 0; x < 8; ++x)
    involutions += (x != q8.identity() && q8.mul(x, x) == q8.identity()) ? 1 : 0;
  CHECK(involutions == 1);

  std::vector<std::pair<std::string, std::size_t>> const orders{
      {"c1-group", 1}, {"c8-group", 8}, {"s3-group", 6}, {"d8-group", 8},
      {"a4-group", 12}, {"s4-group", 24}, {"d16-group", 16}, {"c2xc2-group", 4}};
  for (auto const& [name, order] : orders) {
    CHECK(builtin_group(name).order() == order);
  }
  CHECK(std::holds_alternative<GroupTable>(builtin("s3-group")));
  CHECK(std::holds_alternative<Quandle>(builtin("conj-s3")));
  CHECK_THROWS_AS(builtin("no-such-thing"), UnknownName);
  CHECK_THROWS_AS(builtin_quandle("s3-group"), UnknownName);
  CHECK_THROWS_AS(builtin_group("d4"), UnknownName);
  for (auto const& name : builtin_quandle_names()) CHECK_NOTHROW(builtin_quandle(name));
}

TEST_CASE("corpus construction") {
  Corpus const c = build_corpus({.exhaustive_up_to = 3, .include_builtins = false,
                                 .dihedral_tower_up_to = 4});
  // 5 enumerated + dihedral(1), (2), (4), (8), (16).
  CHECK(c.quandles.size() == 10);
  CHECK(c.groups.empty());
  Corpus const full = build_corpus({});
  CHECK(full.groups.size() == builtin_group_names().size());
}
