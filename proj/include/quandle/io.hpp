#pragma once

#include <string>
#include <string_view>

#include "quandle/classify.hpp"
#include "quandle/core.hpp"
#include "quandle/orbitseries.hpp"
#include "quandle/verify.hpp"

namespace quandle {

// .qnd text: '#' comment lines (a "# name: <label>" comment sets the label),
// then n, then n rows of n 1-based entries; row a, column b holds a ▷ b.
// Throws ParseError for malformed text and AxiomViolation for tables that are
// not quandles.
Quandle parse_qnd(std::string_view text);
// Normalized form: optional name comment, single spaces, trailing newline.
std::string serialize_qnd(Quandle const& q);

Quandle read_qnd_file(std::string const& path);
void write_qnd_file(std::string const& path, Quandle const& q);

// Field names match ClassificationReport; absent values are null.
std::string report_json(ClassificationReport const& r, int indent = 2);
std::string report_text(ClassificationReport const& r);

// Elements are printed 1-based.
std::string tree_text(OrbitTreeNode const& root);
std::string tree_dot(OrbitTreeNode const& root);

std::string suite_text(SuiteReport const& report, bool verbose = false);

}  // namespace quandle
