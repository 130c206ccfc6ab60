// qnd: generate, classify and inspect finite quandles stored as .qnd files.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quandle/classify.hpp"
#include "quandle/congruence.hpp"
#include "quandle/corpus.hpp"
#include "quandle/error.hpp"
#include "quandle/io.hpp"
#include "quandle/orbitseries.hpp"
#include "quandle/verify.hpp"

namespace {

using namespace quandle;

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kInvalid = 2,
  kCap = 3,
  kVerification = 4,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t to_size(std::string const& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (std::exception const&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-') {
    throw UsageError("expected a non-negative integer, got '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

std::int64_t to_int(std::string const& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (std::exception const&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
  return v;
}

GroupTable group_named(std::string name) {
  if (name.find("-group") == std::string::npos) name += "-group";
  return builtin_group(name);
}

void expect_count(std::string const& family, std::vector<std::string> const& p,
                  std::size_t low, std::size_t high) {
  if (p.size() < low || p.size() > high) {
    throw UsageError(family + " takes " + std::to_string(low)
                     + (low == high ? "" : " to " + std::to_string(high))
                     + " parameter(s)");
  }
}

Quandle make(std::string const& family, std::vector<std::string> const& p);

// "dihedral:4", "affine:5,2", "builtin:t1", "conj:s3,1"
Quandle operand(std::string const& text) {
  auto const colon = text.find(':');
  std::string const family = text.substr(0, colon);
  std::vector<std::string> params;
  if (colon != std::string::npos) {
    std::stringstream rest(text.substr(colon + 1));
    for (std::string item; std::getline(rest, item, ',');) params.push_back(item);
  }
  if (family == "union" || family == "product") {
    throw UsageError("operands cannot be nested unions or products");
  }
  return make(family, params);
}

Quandle make(std::string const& family, std::vector<std::string> const& p) {
  if (family == "trivial") {
    expect_count(family, p, 1, 1);
    return trivial(to_size(p[0]));
  }
  if (family == "dihedral") {
    expect_count(family, p, 1, 1);
    return dihedral(to_size(p[0]));
  }
  if (family == "affine") {
    expect_count(family, p, 2, 2);
    return affine(to_size(p[0]), to_int(p[1]));
  }
  if (family == "conj") {
    expect_count(family, p, 1, 2);
    return conj(group_named(p[0]), p.size() == 2 ? to_int(p[1]) : 1);
  }
  if (family == "builtin") {
    expect_count(family, p, 1, 1);
    return builtin_quandle(p[0]);
  }
  if (family == "union") {
    if (p.empty()) throw UsageError("union needs at least one operand");
    std::vector<Quandle> parts;
    for (auto const& item : p) parts.push_back(operand(item));
    return disjoint_union(parts);
  }
  if (family == "product") {
    if (p.empty()) throw UsageError("product needs at least one operand");
    Quandle q = operand(p[0]);
    for (std::size_t i = 1; i < p.size(); ++i) q = direct_product(q, operand(p[i]));
    return q;
  }
  throw UsageError("unknown family '" + family
                   + "' (trivial, dihedral, affine, conj, union, product, builtin)");
}

std::string witness_text(std::vector<std::uint32_t> const& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += (i ? "," : "") + std::to_string(w[i] + 1);
  }
  return out + ")";
}

struct CapOptions {
  std::size_t group = kDefaultGroupCap;
  std::size_t work = kDefaultWorkCap;
  std::size_t congruences = kDefaultCongruenceCap;
  std::size_t subsets = std::size_t{1} << 20;

  void attach(CLI::App* app) {
    app->add_option("--cap-group", group, "Largest permutation group to build");
    app->add_option("--cap-work", work, "Table lookups allowed for identity checks");
    app->add_option("--cap-congruences", congruences, "Largest congruence lattice");
    app->add_option("--cap-subsets", subsets, "Subsets examined by subquandle scans");
  }

  Caps caps() const { return Caps{group, work, congruences, subsets}; }
};

int run(int argc, char** argv) {
  CLI::App app{"Finite quandle toolkit"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Write a quandle table");
  std::string family;
  std::vector<std::string> params;
  std::string out_path;
  gen->add_option("family", family, "trivial|dihedral|affine|conj|union|product|builtin")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("-o,--out", out_path, "Output file (default: standard output)");

  auto* cls = app.add_subcommand("classify", "Classify a .qnd file");
  std::string classify_path;
  std::string format = "text";
  CapOptions classify_caps;
  cls->add_option("path", classify_path)->required();
  cls->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  classify_caps.attach(cls);

  auto* tree = app.add_subcommand("tree", "Print the orbit tree of a .qnd file");
  std::string tree_path;
  bool dot = false;
  tree->add_option("path", tree_path)->required();
  tree->add_flag("--dot", dot, "Emit a DOT digraph");

  auto* verify = app.add_subcommand("verify", "Run the theorem checks over a corpus");
  std::size_t max_order = 0;
  bool exhaustive = false;
  bool no_builtins = false;
  bool verbose = false;
  std::size_t tower = 4;
  std::vector<std::string> includes;
  CapOptions verify_caps;
  verify->add_option("--max-order", max_order,
                     "Only quandles up to this order (exhaustive default 5)");
  verify->add_flag("--exhaustive", exhaustive,
                   "Add every quandle up to --max-order (at most 6)");
  verify->add_flag("--no-builtins", no_builtins, "Leave out the builtin quandles and groups");
  verify->add_option("--tower", tower, "Include dihedral(2^k) for k up to this value");
  verify->add_option("--include", includes, "Extra .qnd files");
  verify->add_flag("-v,--verbose", verbose, "Show statements and notes");
  verify_caps.attach(verify);

  app.add_subcommand("list", "List builtin quandles and groups");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (app.got_subcommand("list")) {
    for (auto const& name : builtin_quandle_names()) std::cout << name << "\n";
    for (auto const& name : builtin_group_names()) std::cout << name << "\n";
    return kOk;
  }
  if (app.got_subcommand(gen)) {
    std::optional<Quandle> made;
    try {
      made = make(family, params);
    } catch (InvalidInput const& e) {
      throw UsageError(e.what());
    } catch (NotAUnit const& e) {
      throw UsageError(e.what());
    }
    Quandle const& q = *made;
    if (out_path.empty()) {
      std::cout << serialize_qnd(q);
    } else {
      write_qnd_file(out_path, q);
    }
    return kOk;
  }
  if (app.got_subcommand(cls)) {
    auto const report = classify(read_qnd_file(classify_path), classify_caps.caps());
    std::cout << (format == "json" ? report_json(report) : report_text(report));
    return kOk;
  }
  if (app.got_subcommand(tree)) {
    auto const root = orbit_tree(read_qnd_file(tree_path));
    std::cout << (dot ? tree_dot(root) : tree_text(root));
    return kOk;
  }

  // verify
  if (exhaustive && max_order == 0) max_order = 5;
  CorpusSpec spec;
  spec.exhaustive_up_to = exhaustive ? max_order : 0;
  spec.include_builtins = !no_builtins;
  spec.dihedral_tower_up_to = tower;
  Corpus corpus = build_corpus(spec);
  for (auto const& path : includes) corpus.quandles.push_back(read_qnd_file(path));
  if (max_order != 0) {
    std::erase_if(corpus.quandles,
                  [&](Quandle const& q) { return q.order() > max_order; });
  }
  VerifyOptions options;
  options.caps = verify_caps.caps();
  auto const report = verify_suite(corpus.quandles, corpus.groups, options);
  std::cout << "corpus: " << corpus.quandles.size() << " quandles, "
            << corpus.groups.size() << " groups\n"
            << suite_text(report, verbose);
  return report.passed() ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (AxiomViolation const& e) {
    std::cerr << "error: axiom " << e.axiom() << " violated at "
              << witness_text(e.witness()) << " (1-based)\n";
    return kInvalid;
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInvalid;
  } catch (CapExceeded const& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (InconsistentCharacterizations const& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kVerification;
  } catch (UnknownName const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
