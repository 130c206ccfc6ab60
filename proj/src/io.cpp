#include "quandle/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "quandle/error.hpp"

namespace quandle {

namespace {

std::string_view trim(std::string_view s) {
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::size_t> numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc{} || ptr != line.data() + end) {
      throw ParseError(line_no, "expected a positive integer, got '"
                                    + std::string(line.substr(pos, end - pos)) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

std::string set_text(ElementSet const& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s[i] + 1);
  }
  return out + "}";
}

template <typename T>
nlohmann::ordered_json optional_json(std::optional<T> const& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <typename T>
std::string optional_text(std::optional<T> const& v) {
  if (!v) return "none";
  if constexpr (std::is_same_v<T, bool>) return *v ? "true" : "false";
  else return std::to_string(*v);
}

void tree_lines(OrbitTreeNode const& node, std::string& out) {
  out += std::string(2 * node.depth, ' ') + set_text(node.subset) + " ("
         + std::to_string(node.subset.size()) + ")\n";
  for (auto const& child : node.children) tree_lines(child, out);
}

void dot_nodes(OrbitTreeNode const& node, std::size_t& next, std::string& out) {
  std::size_t const id = next++;
  out += "  n" + std::to_string(id) + " [label=\"" + set_text(node.subset)
         + "\\n|" + std::to_string(node.subset.size()) + "|\"];\n";
  for (auto const& child : node.children) {
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(next) + ";\n";
    dot_nodes(child, next, out);
  }
}

}  // namespace

Quandle parse_qnd(std::string_view text) {
  std::string label;
  std::size_t n = 0;
  bool have_n = false;
  std::vector<Element> flat;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto const eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos
                                                ? std::string_view::npos
                                                : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      if (body.rfind("name:", 0) == 0) label = std::string(trim(body.substr(5)));
      continue;
    }
    auto const row = numbers(line, line_no);
    if (!have_n) {
      if (row.size() != 1 || row[0] == 0) {
        throw ParseError(line_no, "first data line must be the order n >= 1");
      }
      n = row[0];
      have_n = true;
      flat.reserve(n * n);
      continue;
    }
    if (flat.size() == n * n) {
      throw ParseError(line_no, "more than n table rows");
    }
    if (row.size() != n) {
      throw ParseError(line_no, "expected " + std::to_string(n) + " entries, got "
                                    + std::to_string(row.size()));
    }
    for (std::size_t v : row) {
      if (v < 1 || v > n) {
        throw ParseError(line_no, "entry " + std::to_string(v) + " outside 1.."
                                      + std::to_string(n));
      }
      flat.push_back(static_cast<Element>(v - 1));
    }
  }
  if (!have_n) throw ParseError(line_no, "missing order line");
  if (flat.size() != n * n) {
    throw ParseError(line_no, "expected " + std::to_string(n) + " table rows, got "
                                  + std::to_string(flat.size() / n));
  }
  return validate(n, std::move(flat), std::move(label));
}

std::string serialize_qnd(Quandle const& q) {
  std::string out;
  if (!q.label().empty()) out += "# name: " + q.label() + "\n";
  out += std::to_string(q.order()) + "\n";
  for (Element a = 0; a < q.order(); ++a) {
    for (Element b = 0; b < q.order(); ++b) {
      out += (b ? " " : "") + std::to_string(q(a, b) + 1);
    }
    out += "\n";
  }
  return out;
}

Quandle read_qnd_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_qnd(buffer.str());
}

void write_qnd_file(std::string const& path, Quandle const& q) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << serialize_qnd(q);
}

std::string report_json(ClassificationReport const& r, int indent) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  j["order"] = r.order;
  j["orbit_sizes"] = r.orbit_sizes;
  j["connected"] = r.connected;
  j["faithful"] = r.faithful;
  j["medial"] = r.medial;
  j["abelian"] = r.abelian;
  j["nilpotent_quandle"] = r.nilpotent_quandle;
  j["solvable_quandle"] = r.solvable_quandle;
  j["trans_derived_length"] = optional_json(r.trans_derived_length);
  j["reductive_degree"] = optional_json(r.reductive_degree);
  j["locally_reductive_degree"] = optional_json(r.locally_reductive_degree);
  j["tos_degree"] = optional_json(r.tos_degree);
  j["os_degree"] = r.os_degree;
  j["ncs"] = optional_json(r.ncs);
  j["inn_order"] = r.inn_order;
  j["trans_order"] = r.trans_order;
  j["inn_nilpotency_class"] = optional_json(r.inn_nilpotency_class);
  return j.dump(indent) + "\n";
}

std::string report_text(ClassificationReport const& r) {
  std::ostringstream os;
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::string sizes;
  for (std::size_t i = 0; i < r.orbit_sizes.size(); ++i) {
    sizes += (i ? " " : "") + std::to_string(r.orbit_sizes[i]);
  }
  os << "label:                    " << (r.label.empty() ? "-" : r.label) << "\n"
     << "order:                    " << r.order << "\n"
     << "orbit_sizes:              " << sizes << "\n"
     << "connected:                " << flag(r.connected) << "\n"
     << "faithful:                 " << flag(r.faithful) << "\n"
     << "medial:                   " << flag(r.medial) << "\n"
     << "abelian:                  " << flag(r.abelian) << "\n"
     << "nilpotent_quandle:        " << flag(r.nilpotent_quandle) << "\n"
     << "solvable_quandle:         " << flag(r.solvable_quandle) << "\n"
     << "trans_derived_length:     " << optional_text(r.trans_derived_length) << "\n"
     << "reductive_degree:         " << optional_text(r.reductive_degree) << "\n"
     << "locally_reductive_degree: " << optional_text(r.locally_reductive_degree) << "\n"
     << "tos_degree:               " << optional_text(r.tos_degree) << "\n"
     << "os_degree:                " << r.os_degree << "\n"
     << "ncs:                      " << optional_text(r.ncs) << "\n"
     << "inn_order:                " << r.inn_order << "\n"
     << "trans_order:              " << r.trans_order << "\n"
     << "inn_nilpotency_class:     " << optional_text(r.inn_nilpotency_class) << "\n";
  return os.str();
}

std::string tree_text(OrbitTreeNode const& root) {
  std::string out;
  tree_lines(root, out);
  return out;
}

std::string tree_dot(OrbitTreeNode const& root) {
  std::string out = "digraph orbit_tree {\n  node [shape=box];\n";
  std::size_t next = 0;
  dot_nodes(root, next, out);
  return out + "}\n";
}

std::string suite_text(SuiteReport const& report, bool verbose) {
  std::ostringstream os;
  for (auto const& c : report.checks) {
    os << (c.passed() ? "PASS " : "FAIL ") << c.name << "  (checked " << c.checked
       << ", skipped " << c.skipped << ")\n";
    if (verbose || !c.passed()) {
      os << "     " << c.statement << "\n";
    }
    if (verbose) {
      for (auto const& note : c.notes) os << "     note: " << note << "\n";
    }
    for (auto const& f : c.failures) {
      os << "     counterexample: " << f.message << "\n";
      if (f.witness) {
        std::istringstream table(serialize_qnd(*f.witness));
        for (std::string line; std::getline(table, line);) {
          os << "       " << line << "\n";
        }
      }
    }
  }
  std::size_t failed = 0;
  for (auto const& c : report.checks) failed += c.passed() ? 0 : 1;
  os << (failed == 0 ? "all " + std::to_string(report.checks.size()) + " checks passed"
                     : std::to_string(failed) + " of "
                           + std::to_string(report.checks.size()) + " checks failed")
     << "\n";
  return os.str();
}

}  // namespace quandle
