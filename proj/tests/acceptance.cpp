// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "quandle/classify.hpp"
#include "quandle/congruence.hpp"
#include "quandle/corpus.hpp"
#include "quandle/error.hpp"
#include "quandle/io.hpp"
#include "quandle/orbitseries.hpp"

using namespace quandle;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, std::string const& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string show(std::optional<std::size_t> d) {
  return d ? std::to_string(*d) : "none";
}

// Every quandle of order <= 5 plus builtins and the dihedral tower.
std::vector<Quandle> const& corpus() {
  static std::vector<Quandle> const c = [] {
    return build_corpus({.exhaustive_up_to = 5, .include_builtins = true,
                         .dihedral_tower_up_to = 4})
        .quandles;
  }();
  return c;
}

Outcome ac1() {
  Outcome o;
  Quandle const e = builtin_quandle("paper-example-16");
  auto const r = classify(e);
  o.require(r.orbit_sizes == std::vector<std::size_t>{8, 4, 4}, "orbit sizes");
  auto const parts = orbits(e);
  o.require(parts.size() == 3 && parts[0] == ElementSet{0, 1, 2, 3, 4, 5, 6, 7},
            "first orbit is not {1..8}");
  o.require(is_isomorphic(induced_subquandle(e, parts[0]),
                          disjoint_union(dihedral(4), dihedral(4)))
                .has_value(),
            "orbit {1..8} is not D_4 + D_4");
  o.require(r.tos_degree == 3u, "tos degree " + show(r.tos_degree));
  auto const d = degrees(e);
  o.require(in_tos(d, 3) && !in_tos(d, 2), "tOS_3 / tOS_2 membership");
  o.require(is_n_locally_reductive(e, 2), "not 2-locally reductive");
  o.require(r.locally_reductive_degree == 2u,
            "LR degree " + show(r.locally_reductive_degree));
  o.require(is_n_reductive(e, 5), "not 5-reductive");
  o.require(!is_n_reductive(e, 3), "3-reductive");
  if (o.pass) {
    o.detail = "orbits 8/4/4, tOS 3, LR 2, 5-reductive, not 3-reductive (minimal "
               "reductive degree " + show(r.reductive_degree) + ")";
  }
  return o;
}

Outcome ac2() {
  Outcome o;
  auto const start = Clock::now();
  for (std::size_t k = 0; k <= 4; ++k) {
    Quandle const q = dihedral(std::size_t{1} << k);
    auto const tos = degrees(q).tos_degree;
    o.require(tos == k, "dihedral(" + std::to_string(1u << k) + ") tos " + show(tos));
    if (k == 0) continue;
    auto const parts = orbits(q);
    o.require(parts.size() == 2, "level " + std::to_string(k) + " orbit count");
    Quandle const half = dihedral(std::size_t{1} << (k - 1));
    for (auto const& part : parts) {
      o.require(is_isomorphic(induced_subquandle(q, part), half).has_value(),
                "level " + std::to_string(k) + " orbit not a half-size dihedral");
    }
  }
  double const t = seconds_since(start);
  o.require(t < 1.0, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "tos(dihedral(2^k)) = k for k = 0..4 in " + std::to_string(t) + " s";
  return o;
}

Outcome ac3() {
  Outcome o;
  auto const t = orbit_tree(dihedral(4));
  o.require(node_count(t) == 7, "node count " + std::to_string(node_count(t)));
  o.require(tree_depth(t) == 2, "depth " + std::to_string(tree_depth(t)));
  for (auto const& b : branches(t)) {
    o.require(b.back().size() == 1, "non-singleton leaf");
  }
  if (o.pass) o.detail = "7 nodes, depth 2, singleton leaves";
  return o;
}

Outcome ac4() {
  Outcome o;
  auto const start = Clock::now();
  std::vector<std::size_t> counts;
  for (std::size_t n = 1; n <= 5; ++n) counts.push_back(enumerate_quandles(n).size());
  o.require(counts == std::vector<std::size_t>{1, 1, 3, 7, 22}, "enumeration counts");
  for (auto const& q : corpus()) {
    auto const r = reductivity_routes(q);
    o.require(r.identity == r.o_chain && r.identity == r.inn_class,
              q.label() + ": identity " + show(r.identity) + ", o-chain "
                  + show(r.o_chain) + ", inn " + show(r.inn_class));
    o.require(r.l_chain == r.identity, q.label() + ": l-chain " + show(r.l_chain));
  }
  double const t = seconds_since(start);
  o.require(t < 60.0, "took " + std::to_string(t) + " s");
  if (o.pass) {
    o.detail = std::to_string(corpus().size()) + " quandles agree on all four routes in "
               + std::to_string(t) + " s";
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  for (auto const& q : corpus()) {
    bool const r = reductive_degree(q).has_value();
    bool const lr = locally_reductive_degree(q).has_value();
    o.require(r == lr, q.label());
  }
  if (o.pass) o.detail = "reductive iff locally reductive on " + std::to_string(corpus().size());
  return o;
}

Outcome ac6() {
  Outcome o;
  std::size_t medial = 0;
  for (auto const& q : corpus()) {
    auto const r = classify(q);
    auto const &lr = r.locally_reductive_degree, &t = r.tos_degree, &rd = r.reductive_degree;
    if (lr && t && rd) {
      o.require(*lr <= *t && *t <= *rd, q.label() + ": " + show(lr) + " " + show(t) + " " + show(rd));
    }
    if (r.medial) {
      ++medial;
      o.require(lr == t && t == rd, q.label() + " medial but degrees differ");
    }
  }
  if (o.pass) o.detail = "LR <= tOS <= R everywhere; " + std::to_string(medial) + " medial members equal";
  return o;
}

Outcome ac7() {
  Outcome o;
  auto const start = Clock::now();
  auto members = corpus();
  auto six = enumerate_quandles(6);
  members.insert(members.end(), six.begin(), six.end());
  std::size_t checked = 0;
  for (auto const& q : members) {
    if (q.order() > 10) continue;
    ++checked;
    o.require(degrees(q).tos_degree.has_value() == is_ncs(q), q.label());
  }
  double const t = seconds_since(start);
  o.require(t < 120.0, "took " + std::to_string(t) + " s");
  if (o.pass) {
    o.detail = std::to_string(checked) + " quandles of order <= 10 in " + std::to_string(t) + " s";
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  std::size_t checked = 0;
  for (auto const& name : builtin_group_names()) {
    GroupTable const g = builtin_group(name);
    if (g.order() > 16) continue;
    ++checked;
    Quandle const q = conj(g);
    auto const cls = nilpotency_class(regular_group(g));
    auto const rd = reductive_degree(q);
    if (cls) {
      o.require(rd == cls, name + ": class " + show(cls) + ", degree " + show(rd));
      if (*cls >= 1) o.require(is_n_reductive(q, *cls), name + " not class-reductive");
      if (*cls >= 2) o.require(!is_n_reductive(q, *cls - 1), name + " reductive below class");
    } else {
      o.require(!rd, name + ": not nilpotent but reductive");
    }
    bool const two_engel = oracle::n_engel_group(g, 2);
    o.require(in_tos(degrees(q), 2) == two_engel, name + ": tOS_2 vs 2-Engel");
    if (two_engel) o.require(rd && *rd <= 3, name + ": 2-Engel, degree " + show(rd));
  }
  if (o.pass) o.detail = std::to_string(checked) + " groups of order <= 16";
  return o;
}

ElementSet project(ElementSet const& s, std::vector<Element> const& pr) {
  ElementSet out;
  for (Element x : s) out.push_back(pr[x]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Outcome ac9() {
  Outcome o;
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& q : enumerate_quandles(n)) {
      auto const cons = all_congruences(q);
      o.require(cons == all_congruences_by_scan(q), q.label() + ": lattice mismatch");
      for (auto const& alpha : cons) {
        ++pairs;
        Quotient const quo = quotient(q, alpha);
        for (Element x = 0; x < q.order(); ++x) {
          auto const upstairs = principal_series(q, x);
          auto const downstairs = principal_series(quo.quandle, quo.projection[x]);
          // Q_i/α = (Q/α)_i for every i; past the end the last member repeats.
          for (std::size_t i = 0; i < std::max(upstairs.size(), downstairs.size()); ++i) {
            auto const& a = upstairs[std::min(i, upstairs.size() - 1)];
            auto const& b = downstairs[std::min(i, downstairs.size() - 1)];
            o.require(project(a, quo.projection) == b,
                      q.label() + ": series of " + std::to_string(x + 1) + " member "
                          + std::to_string(i));
          }
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " (quandle, congruence) pairs";
  return o;
}

Outcome ac10() {
  Outcome o;
  auto const dir = std::filesystem::temp_directory_path() / "qnd-acceptance";
  std::filesystem::create_directories(dir);
  std::size_t files = 0;
  for (auto const& q : corpus()) {
    auto const path = (dir / ("q" + std::to_string(files++) + ".qnd")).string();
    write_qnd_file(path, q);
    std::ifstream in(path, std::ios::binary);
    std::stringstream text;
    text << in.rdbuf();
    Quandle const back = read_qnd_file(path);
    o.require(back == q && text.str() == serialize_qnd(back), q.label() + " round trip");
  }
  std::filesystem::remove_all(dir);

  Quandle const d4 = dihedral(4);
  std::size_t mutations = 0;
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b)
      for (Element v = 0; v < 4; ++v) {
        if (v == d4(a, b)) continue;
        ++mutations;
        std::vector<Element> flat(d4.flat().begin(), d4.flat().end());
        flat[a * 4 + b] = v;
        bool rejected = false;
        try {
          validate(4, flat);
        } catch (AxiomViolation const& e) {
          rejected = !e.witness().empty();
        }
        o.require(rejected, "mutation at (" + std::to_string(a + 1) + ","
                                + std::to_string(b + 1) + ") accepted");
      }
  if (o.pass) {
    o.detail = std::to_string(files) + " files round-trip; " + std::to_string(mutations)
               + " mutations rejected";
  }
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"AC1 16-element witness", ac1},
      {"AC2 dihedral tower", ac2},
      {"AC3 D_4 orbit tree", ac3},
      {"AC4 reductivity routes agree", ac4},
      {"AC5 reductive iff locally reductive", ac5},
      {"AC6 inclusion chain", ac6},
      {"AC7 nCS equivalence", ac7},
      {"AC8 conjugation/Engel bridge", ac8},
      {"AC9 quotient orbit series", ac9},
      {"AC10 round trip and axiom gate", ac10},
  };
  int failed = 0;
  for (auto const& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (std::exception const& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
