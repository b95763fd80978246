#pragma once

#include <string>
#include <string_view>

#include "nary/algebra.hpp"
#include "nary/forms.hpp"

namespace nary {

// Algebra files: 1-based indices, zero entries omitted, one entry per line in
// lexicographic (in, out) order, rationals as canonical "p" or "p/q".

std::string to_json(const NaryAlgebra& L);
/// Throws ParseError on malformed input.
NaryAlgebra algebra_from_json(std::string_view text);

std::string to_json(const TraceForm& k);
TraceForm trace_form_from_json(std::string_view text);

/// {"diag": [...]} for ±1 diagonals, {"matrix": [[...]]} otherwise.
std::string metric_to_json(const Metric& g);
Metric metric_from_json(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

NaryAlgebra load(const std::string& path);
void save(const NaryAlgebra& L, const std::string& path);

}  // namespace nary
