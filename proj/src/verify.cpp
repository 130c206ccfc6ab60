#include "quandle/verify.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "quandle/congruence.hpp"
#include "quandle/error.hpp"
#include "quandle/orbitseries.hpp"
#include "quandle/permgroup.hpp"

namespace quandle {

namespace {

using Degree = std::optional<std::size_t>;

std::string show(Degree d) { return d ? std::to_string(*d) : "none"; }

std::string show_set(ElementSet const& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s[i] + 1);
  }
  return out + "}";
}

std::string name_of(Quandle const& q) {
  return (q.label().empty() ? std::string("unnamed") : q.label()) + " [order "
         + std::to_string(q.order()) + "]";
}

// Everything the checks need about one corpus member, computed once.
struct Member {
  Quandle const* q;
  std::optional<ClassificationReport> report;
  std::string classify_error;
  bool classify_capped = false;
  std::optional<std::vector<Congruence>> congruences;
};

void fail(CheckResult& r, std::string message,
          std::optional<Quandle> witness = std::nullopt) {
  r.failures.push_back({std::move(message), std::move(witness)});
}

ElementSet project(ElementSet const& s, std::vector<Element> const& projection) {
  ElementSet out;
  for (Element x : s) out.push_back(projection[x]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// max over classes of f([a]_α), or nothing if some class has no value.
template <typename F>
Degree max_over_classes(Quandle const& q, Congruence const& alpha, F f) {
  std::size_t best = 0;
  for (auto const& cls : alpha.classes()) {
    Degree d = f(induced_subquandle(q, cls));
    if (!d) return std::nullopt;
    best = std::max(best, *d);
  }
  return best;
}

Degree tos_of(Quandle const& q) { return degrees(q).tos_degree; }

std::optional<std::size_t> power_of_two_exponent(std::string const& label) {
  std::string const prefix = "dihedral(";
  if (label.rfind(prefix, 0) != 0 || label.back() != ')') return std::nullopt;
  std::string const digits = label.substr(prefix.size(), label.size() - prefix.size() - 1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
    return std::nullopt;
  }
  unsigned long long const n = std::stoull(digits);
  if (!std::has_single_bit(n)) return std::nullopt;
  return static_cast<std::size_t>(std::countr_zero(n));
}

std::vector<Permutation> as_perms(std::vector<Permutation> const& regular,
                                  ElementSet const& subset) {
  std::vector<Permutation> out;
  for (Element x : subset) out.push_back(regular[x]);
  return out;
}

class Suite {
 public:
  Suite(std::span<Quandle const> quandles, std::span<GroupTable const> groups,
        VerifyOptions const& options)
      : groups_(groups), options_(options) {
    for (auto const& q : quandles) {
      Member m{&q, std::nullopt, {}, false, std::nullopt};
      try {
        m.report = classify(q, options.caps);
      } catch (CapExceeded const& e) {
        m.classify_capped = true;
        m.classify_error = e.what();
      } catch (Error const& e) {
        m.classify_error = e.what();
      }
      if (q.order() <= options.congruence_order_limit) {
        try {
          m.congruences = all_congruences(q, options.caps.congruences);
        } catch (CapExceeded const&) {
        }
      }
      members_.push_back(std::move(m));
    }
  }

  SuiteReport run() {
    SuiteReport out;
    out.checks.push_back(classification());
    out.checks.push_back(reductivity_routes_agree());
    out.checks.push_back(reductive_faithful_or_connected());
    out.checks.push_back(reductive_iff_locally_reductive());
    out.checks.push_back(degree_ordering());
    out.checks.push_back(medial_degrees_equal());
    out.checks.push_back(medial_iff_trans_abelian());
    out.checks.push_back(inn_trans_orbits());
    out.checks.push_back(principal_branches());
    out.checks.push_back(tos_iff_ncs());
    out.checks.push_back(solvable_tos_bound());
    out.checks.push_back(congruence_enumeration());
    out.checks.push_back(trans_rel_trivial_iff_below_lambda());
    out.checks.push_back(lr_extension_bound());
    out.checks.push_back(tos_extension_bound());
    out.checks.push_back(homomorphic_images());
    out.checks.push_back(quotient_series());
    out.checks.push_back(tos_subquandles());
    out.checks.push_back(tos_products());
    out.checks.push_back(dihedral_tower());
    out.checks.push_back(inclusion_strictness());
    out.checks.push_back(conj_reductive_equals_class());
    out.checks.push_back(conj_tos2_iff_two_engel());
    out.checks.push_back(engel_subset_bridge());
    for (auto const& m : members_) {
      if (m.report) out.reports.push_back(*m.report);
    }
    std::stable_sort(out.reports.begin(), out.reports.end(),
                     [](auto const& x, auto const& y) { return x.label < y.label; });
    return out;
  }

 private:
  CheckResult classification() {
    CheckResult r{"classification",
                  "every member classifies with all characterizations agreeing"};
    for (auto const& m : members_) {
      if (m.report) {
        ++r.checked;
      } else if (m.classify_capped) {
        ++r.skipped;
        r.notes.push_back(name_of(*m.q) + ": " + m.classify_error);
      } else {
        ++r.checked;
        fail(r, name_of(*m.q) + ": " + m.classify_error, *m.q);
      }
    }
    return r;
  }

  CheckResult reductivity_routes_agree() {
    CheckResult r{"reductivity-routes",
                  "identity, O-chain, Inn class and L-chain give the same "
                  "reductive degree"};
    for (auto const& m : members_) {
      try {
        auto const routes = reductivity_routes(*m.q, options_.caps);
        ++r.checked;
        if (!routes.agree()) {
          fail(r,
               name_of(*m.q) + ": o-chain " + show(routes.o_chain)
                   + ", identity " + show(routes.identity) + ", inn class "
                   + show(routes.inn_class) + ", l-chain " + show(routes.l_chain),
               *m.q);
          continue;
        }
        if (auto n = routes.identity; n && *n >= 1) {
          if (!is_n_reductive(*m.q, *n, options_.caps.work)
              || (*n >= 2 && is_n_reductive(*m.q, *n - 1, options_.caps.work))) {
            fail(r, name_of(*m.q) + ": n-reductive test not sharp at " + show(n),
                 *m.q);
          }
        }
      } catch (CapExceeded const&) {
        ++r.skipped;
      }
    }
    return r;
  }

  CheckResult reductive_faithful_or_connected() {
    CheckResult r{"reductive-faithful-or-connected",
                  "a reductive quandle that is faithful or connected is T_1"};
    for_reports(r, [&](Member const& m, ClassificationReport const& rep) {
      if (rep.reductive_degree && (rep.faithful || rep.connected) && rep.order != 1) {
        fail(r, name_of(*m.q) + ": reductive and "
                    + (rep.faithful ? "faithful" : "connected"),
             *m.q);
      }
    });
    return r;
  }

  CheckResult reductive_iff_locally_reductive() {
    CheckResult r{"reductive-iff-locally-reductive",
                  "a finite quandle is reductive iff it is locally reductive"};
    for_reports(r, [&](Member const& m, ClassificationReport const& rep) {
      if (rep.reductive_degree.has_value() != rep.locally_reductive_degree.has_value()) {
        fail(r, name_of(*m.q) + ": R " + show(rep.reductive_degree) + ", LR "
                    + show(rep.locally_reductive_degree),
             *m.q);
      }
    });
    return r;
  }

  CheckResult degree_ordering() {
    CheckResult r{"degree-ordering", "LR degree <= tOS degree <= R degree"};
    for_reports(r, [&](Member const& m, ClassificationReport const& rep) {
      auto const& lr = rep.locally_reductive_degree;
      auto const& t = rep.tos_degree;
      auto const& rd = rep.reductive_degree;
      bool ok = true;
      if (lr && t && *lr > *t) ok = false;
      if (t && rd && *t > *rd) ok = false;
      // R_n ⊆ tOS_n ⊆ LR_n also forces existence downwards.
      if (rd && !t) ok = false;
      if (t && !lr) ok = false;
      if (!ok) {
        fail(r, name_of(*m.q) + ": LR " + show(lr) + ", tOS " + show(t) + ", R "
                    + show(rd),
             *m.q);
      }
    });
    return r;
  }

  CheckResult medial_degrees_equal() {
    CheckResult r{"medial-degrees-equal",
                  "on medial quandles the LR, tOS and R degrees coincide"};
    for_reports(r, [&](Member const& m, ClassificationReport const& rep) {
      if (!rep.medial) return;
      if (rep.locally_reductive_degree != rep.tos_degree
          || rep.tos_degree != rep.reductive_degree) {
        fail(r, name_of(*m.q) + ": LR " + show(rep.locally_reductive_degree)
                    + ", tOS " + show(rep.tos_degree) + ", R "
                    + show(rep.reductive_degree),
             *m.q);
      }
    });
    return r;
  }

  CheckResult medial_iff_trans_abelian() {
    CheckResult r{"medial-iff-trans-abelian",
                  "medial iff the transvection group is abelian"};
    for_reports(r, [&](Member const& m, ClassificationReport const& rep) {
      bool const abelian = is_abelian(trans(*m.q, options_.caps.group));
      if (abelian != rep.medial) {
        fail(r, name_of(*m.q) + ": medial " + std::to_string(rep.medial)
                    + ", Trans abelian " + std::to_string(abelian),
             *m.q);
      }
    });
    return r;
  }

  CheckResult inn_trans_orbits() {
    CheckResult r{"inn-trans-orbits",
                  "orbits of Inn(Q) and Trans(Q) coincide with the computed orbits"};
    for_reports(r, [&](Member const& m, ClassificationReport const&) {
      auto const expected = orbits(*m.q);
      PermGroup const i = inn(*m.q, options_.caps.group);
      PermGroup const t = trans(*m.q, options_.caps.group);
      bool ok = orbits(i) == expected && orbits_by_elements(i) == expected;
      // Trans acts on each orbit exactly like Inn.
      ok = ok && orbits_by_elements(t) == expected;
      if (!ok) fail(r, name_of(*m.q) + ": orbit partitions differ", *m.q);
    });
    return r;
  }

  CheckResult principal_branches() {
    CheckResult r{"principal-branches",
                  "every branch of the orbit tree is the principal series of "
                  "each element of its leaf"};
    for_reports(r, [&](Member const& m, ClassificationReport const&) {
      for (auto const& branch : branches(orbit_tree(*m.q))) {
        for (Element x : branch.back()) {
          if (principal_series(*m.q, x) != branch) {
            fail(r, name_of(*m.q) + ": branch ending at " + show_set(branch.back())
                        + " differs from the series of " + std::to_string(x + 1),
                 *m.q);
            return;
          }
        }
      }
    });
    return r;
  }

  CheckResult tos_iff_ncs() {
    CheckResult r{"tos-iff-ncs",
                  "tOS degree exists iff no connected subquandle has two or "
                  "more elements"};
    for (auto const& m : members_) {
      if (!m.report || !m.report->ncs) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      if (m.report->tos_degree.has_value() != *m.report->ncs) {
        fail(r, name_of(*m.q) + ": tOS " + show(m.report->tos_degree) + ", nCS "
                    + std::to_string(*m.report->ncs),
             *m.q);
      }
    }
    return r;
  }

  CheckResult solvable_tos_bound() {
    CheckResult r{"solvable-tos-bound",
                  "solvable of length n and k-locally reductive implies tOS "
                  "degree <= n*k"};
    for_reports(r, [&](Member const& m, ClassificationReport const& rep) {
      if (!rep.solvable_quandle || !rep.locally_reductive_degree) return;
      // A quandle with trivial Trans is trivial; its solvability length is 1
      // unless it is T_1.
      std::size_t const length =
          rep.order == 1 ? 0 : std::max<std::size_t>(*rep.trans_derived_length, 1);
      std::size_t const bound = length * *rep.locally_reductive_degree;
      if (!rep.tos_degree || *rep.tos_degree > bound) {
        fail(r, name_of(*m.q) + ": tOS " + show(rep.tos_degree) + " exceeds "
                    + std::to_string(bound),
             *m.q);
      }
    });
    return r;
  }

  CheckResult congruence_enumeration() {
    CheckResult r{"congruence-enumeration",
                  "join closure of principal congruences equals a full "
                  "partition scan"};
    for (auto const& m : members_) {
      if (!m.congruences || m.q->order() > options_.congruence_scan_limit) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      auto const scan = all_congruences_by_scan(*m.q);
      if (scan != *m.congruences) {
        fail(r, name_of(*m.q) + ": " + std::to_string(m.congruences->size())
                    + " by joins, " + std::to_string(scan.size()) + " by scan",
             *m.q);
      }
    }
    return r;
  }

  CheckResult trans_rel_trivial_iff_below_lambda() {
    CheckResult r{"trans-rel-lambda",
                  "the relative transvection group of a congruence is trivial "
                  "iff it lies below lambda"};
    for_congruences(r, [&](Member const& m, Congruence const& alpha) {
      bool const trivial_group = trans_rel(*m.q, alpha, options_.caps.group).size() == 1;
      bool const below = alpha.refines(lambda(*m.q));
      if (trivial_group != below) {
        fail(r, name_of(*m.q) + ": congruence with "
                    + std::to_string(alpha.size()) + " classes",
             *m.q);
      }
    });
    return r;
  }

  CheckResult lr_extension_bound() {
    CheckResult r{"lr-extension-bound",
                  "LR degree <= LR degree of Q/α + max LR degree of the "
                  "classes of α"};
    for_congruences(r, [&](Member const& m, Congruence const& alpha) {
      Degree const whole = m.report ? m.report->locally_reductive_degree : std::nullopt;
      Degree const top = locally_reductive_degree(quotient(*m.q, alpha).quandle);
      Degree const blocks = max_over_classes(
          *m.q, alpha, [](Quandle const& c) { return locally_reductive_degree(c); });
      if (top && blocks && (!whole || *whole > *top + *blocks)) {
        fail(r, name_of(*m.q) + ": LR " + show(whole) + " > " + show(top) + " + "
                    + show(blocks),
             *m.q);
      }
    });
    return r;
  }

  CheckResult tos_extension_bound() {
    CheckResult r{"tos-extension-bound",
                  "tOS degree <= tOS degree of Q/α + max tOS degree of the "
                  "classes of α"};
    for_congruences(r, [&](Member const& m, Congruence const& alpha) {
      Degree const whole = m.report ? m.report->tos_degree : std::nullopt;
      Degree const top = tos_of(quotient(*m.q, alpha).quandle);
      Degree const blocks = max_over_classes(*m.q, alpha, tos_of);
      if (top && blocks && (!whole || *whole > *top + *blocks)) {
        fail(r, name_of(*m.q) + ": tOS " + show(whole) + " > " + show(top) + " + "
                    + show(blocks),
             *m.q);
      }
    });
    return r;
  }

  CheckResult homomorphic_images() {
    CheckResult r{"homomorphic-images",
                  "quotients never have larger OS or tOS degree"};
    for_congruences(r, [&](Member const& m, Congruence const& alpha) {
      if (!m.report) return;
      auto const d = degrees(quotient(*m.q, alpha).quandle);
      bool ok = d.os_degree <= m.report->os_degree;
      if (m.report->tos_degree) {
        ok = ok && d.tos_degree && *d.tos_degree <= *m.report->tos_degree;
      }
      if (!ok) {
        fail(r, name_of(*m.q) + ": quotient by " + std::to_string(alpha.size())
                    + " classes has OS " + std::to_string(d.os_degree) + ", tOS "
                    + show(d.tos_degree),
             *m.q);
      }
    });
    return r;
  }

  CheckResult quotient_series() {
    CheckResult r{"quotient-series",
                  "projected orbit series are orbit series of the quotient, "
                  "member by member"};
    for_congruences(r, [&](Member const& m, Congruence const& alpha) {
      Quotient const quo = quotient(*m.q, alpha);
      auto report_failure = [&](std::string const& what) {
        fail(r, name_of(*m.q) + ": congruence with " + std::to_string(alpha.size())
                    + " classes, " + what,
             *m.q);
      };
      for (Element x = 0; x < m.q->order(); ++x) {
        std::vector<ElementSet> projected;
        for (auto const& member : principal_series(*m.q, x)) {
          auto image = project(member, quo.projection);
          if (projected.empty() || projected.back() != image) {
            projected.push_back(std::move(image));
          }
        }
        if (projected != principal_series(quo.quandle, quo.projection[x])) {
          report_failure("principal series of " + std::to_string(x + 1));
          return;
        }
      }
      for (auto const& branch : branches(orbit_tree(*m.q))) {
        for (std::size_t i = 0; i + 1 < branch.size(); ++i) {
          ElementSet const parent = project(branch[i], quo.projection);
          ElementSet const child = project(branch[i + 1], quo.projection);
          auto const parts = orbits(quo.quandle, parent);
          if (std::find(parts.begin(), parts.end(), child) == parts.end()) {
            report_failure("branch member " + show_set(branch[i + 1]));
            return;
          }
        }
      }
    });
    return r;
  }

  CheckResult tos_subquandles() {
    CheckResult r{"tos-subquandles",
                  "subquandles of a tOS_n quandle are in tOS_n"};
    for (auto const& m : members_) {
      if (!m.report || !m.report->tos_degree
          || m.q->order() > kExactSubquandleLimit) {
        ++r.skipped;
        continue;
      }
      try {
        auto const subs = all_subquandles(*m.q, options_.caps.subsets);
        ++r.checked;
        for (auto const& s : subs.subsets) {
          Degree const d = tos_of(induced_subquandle(*m.q, s));
          if (!d || *d > *m.report->tos_degree) {
            fail(r, name_of(*m.q) + ": subquandle " + show_set(s) + " has tOS "
                        + show(d),
                 *m.q);
            break;
          }
        }
      } catch (CapExceeded const&) {
        ++r.skipped;
      }
    }
    return r;
  }

  CheckResult tos_products() {
    CheckResult r{"tos-products",
                  "the tOS degree of a direct product is the maximum of the "
                  "factors' degrees"};
    for (std::size_t i = 0; i < members_.size(); ++i) {
      for (std::size_t j = i; j < members_.size(); ++j) {
        auto const& a = members_[i];
        auto const& b = members_[j];
        if (!a.report || !b.report
            || a.q->order() * b.q->order() > options_.product_order_limit) {
          continue;
        }
        ++r.checked;
        Degree const d = tos_of(direct_product(*a.q, *b.q));
        Degree expected;
        if (a.report->tos_degree && b.report->tos_degree) {
          expected = std::max(*a.report->tos_degree, *b.report->tos_degree);
        }
        if (d != expected) {
          fail(r, name_of(*a.q) + " x " + name_of(*b.q) + ": tOS " + show(d)
                      + ", expected " + show(expected));
        }
      }
    }
    return r;
  }

  CheckResult dihedral_tower() {
    CheckResult r{"dihedral-tower",
                  "dihedral(2^k) lies in tOS_k but not tOS_{k-1}, with both "
                  "orbits isomorphic to dihedral(2^{k-1})"};
    for (auto const& m : members_) {
      auto const k = power_of_two_exponent(m.q->label());
      if (!k || !m.report) continue;
      ++r.checked;
      if (m.report->tos_degree != k) {
        fail(r, name_of(*m.q) + ": tOS " + show(m.report->tos_degree), *m.q);
        continue;
      }
      if (*k == 0) continue;
      auto const parts = orbits(*m.q);
      Quandle const half = dihedral(std::size_t{1} << (*k - 1));
      bool ok = parts.size() == 2;
      for (auto const& part : parts) {
        ok = ok && is_isomorphic(induced_subquandle(*m.q, part), half).has_value();
      }
      if (!ok) fail(r, name_of(*m.q) + ": orbits are not two halves", *m.q);
      r.notes.push_back(name_of(*m.q) + " in tOS_" + std::to_string(*k)
                        + " \\ tOS_" + std::to_string(*k - 1));
    }
    return r;
  }

  // Strictness of R_n ⊆ tOS_n ⊆ LR_n needs witnesses, not a universal
  // statement: a corpus without them is skipped, never failed.
  CheckResult inclusion_strictness() {
    CheckResult r{"inclusion-strictness",
                  "witnesses for R_n != tOS_n and tOS_n != LR_n at n = 2, 3"};
    for (std::size_t n : {2, 3}) {
      std::optional<std::string> r_vs_tos, tos_vs_lr;
      for (auto const& m : members_) {
        if (!m.report) continue;
        auto const& rep = *m.report;
        auto within = [n](Degree d) { return d && *d <= n; };
        if (!r_vs_tos && within(rep.tos_degree) && !within(rep.reductive_degree)) {
          r_vs_tos = name_of(*m.q);
        }
        if (!tos_vs_lr && within(rep.locally_reductive_degree)
            && !within(rep.tos_degree)) {
          tos_vs_lr = name_of(*m.q);
        }
      }
      auto const sn = std::to_string(n);
      for (auto const& [found, what] :
           {std::pair{r_vs_tos, "tOS_" + sn + " \\ R_" + sn},
            std::pair{tos_vs_lr, "LR_" + sn + " \\ tOS_" + sn}}) {
        if (found) {
          ++r.checked;
          r.notes.push_back(what + ": " + *found);
        } else {
          ++r.skipped;
          r.notes.push_back(what + ": no witness in corpus");
        }
      }
    }
    return r;
  }

  CheckResult conj_reductive_equals_class() {
    CheckResult r{"conj-reductive-equals-class",
                  "Conj(G) is n-reductive exactly for n >= class(G)"};
    for_groups(r, [&](GroupTable const& g) {
      Quandle const q = conj(g);
      Degree const c = nilpotency_class(regular_group(g));
      Degree const d = reductive_degree(q, options_.caps);
      if (c != d) {
        fail(r, g.label() + ": class " + show(c) + ", reductive degree " + show(d), q);
      }
    });
    return r;
  }

  CheckResult conj_tos2_iff_two_engel() {
    CheckResult r{"conj-tos2-iff-two-engel",
                  "Conj(H) is in tOS_2 iff H consists of 2-Engel elements of "
                  "<H>; for 2-Engel G, Conj(G) is 3-reductive"};
    for_groups(r, [&](GroupTable const& g) {
      auto const regular = regular_representation(g);
      PermGroup const whole = regular_group(g);
      bool const two_engel = is_n_engel_subset(whole, whole.elements(), 2);
      Quandle const q = conj(g);
      bool const tos2 = in_tos(degrees(q), 2);
      if (two_engel != tos2) {
        fail(r, g.label() + ": 2-Engel " + std::to_string(two_engel) + ", tOS_2 "
                    + std::to_string(tos2),
             q);
      }
      if (two_engel) {
        Degree const d = reductive_degree(q, options_.caps);
        if (!d || *d > 3) {
          fail(r, g.label() + ": 2-Engel but reductive degree " + show(d), q);
        }
      }
      std::vector<ElementSet> subsets = g.conjugacy_classes();
      ElementSet all(g.order());
      for (Element x = 0; x < g.order(); ++x) all[x] = x;
      subsets.push_back(all);
      for (auto const& h : subsets) {
        try {
          conj_two_engel_check(g, h);
        } catch (InconsistentCharacterizations const& e) {
          fail(r, g.label() + " on " + show_set(h) + ": " + e.what());
        }
      }
    });
    return r;
  }

  CheckResult engel_subset_bridge() {
    CheckResult r{"engel-subset-bridge",
                  "Conj(H) is n-locally reductive iff H is an n-Engel subset"};
    for_groups(r, [&](GroupTable const& g) {
      auto const regular = regular_representation(g);
      std::vector<ElementSet> subsets = g.conjugacy_classes();
      ElementSet all(g.order());
      for (Element x = 0; x < g.order(); ++x) all[x] = x;
      subsets.push_back(all);
      for (auto const& h : subsets) {
        auto const perms = as_perms(regular, h);
        PermGroup const generated = closure(g.order(), perms, options_.caps.group);
        Quandle const q = conj_subset(g, h);
        for (std::size_t n = 1; n <= options_.engel_limit; ++n) {
          if (is_n_locally_reductive(q, n) != is_n_engel_subset(generated, perms, n)) {
            fail(r, g.label() + " on " + show_set(h) + " at n = " + std::to_string(n),
                 q);
          }
        }
      }
    });
    return r;
  }

  template <typename F>
  void for_reports(CheckResult& r, F f) {
    for (auto const& m : members_) {
      if (!m.report) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      try {
        f(m, *m.report);
      } catch (CapExceeded const&) {
        --r.checked;
        ++r.skipped;
      }
    }
  }

  template <typename F>
  void for_congruences(CheckResult& r, F f) {
    for (auto const& m : members_) {
      if (!m.congruences) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      try {
        for (auto const& alpha : *m.congruences) {
          std::size_t const before = r.failures.size();
          f(m, alpha);
          if (r.failures.size() != before) break;
        }
      } catch (CapExceeded const&) {
        --r.checked;
        ++r.skipped;
      }
    }
  }

  template <typename F>
  void for_groups(CheckResult& r, F f) {
    for (auto const& g : groups_) {
      if (g.order() > options_.group_order_limit) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      try {
        f(g);
      } catch (CapExceeded const&) {
        --r.checked;
        ++r.skipped;
      }
    }
  }

  std::span<GroupTable const> groups_;
  VerifyOptions options_;
  std::vector<Member> members_;
};

}  // namespace

bool SuiteReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](CheckResult const& c) { return c.passed(); });
}

SuiteReport verify_suite(std::span<Quandle const> quandles,
                         std::span<GroupTable const> groups,
                         VerifyOptions const& options) {
  return Suite(quandles, groups, options).run();
}

}  // namespace quandle
