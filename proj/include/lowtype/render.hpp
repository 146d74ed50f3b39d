#pragma once

#include <string>
#include <vector>

#include "lowtype/branching.hpp"
#include "lowtype/sl2.hpp"

namespace lowtype {

enum class Format { json, csv, md, plain };

// Accepts "json", "csv", "md", "plain"; anything else is a usage error.
Format parse_format(const std::string& text);

// Every renderer returns complete output text ending in a newline, and is
// byte-deterministic in its inputs.

std::string render_decomposition(const Sl2Decomposition& dec, Format format,
                                 bool with_character = false);

// Decomposition of a restricted irrep plus its minimal occurring dimension.
// `selector_key` is "n" or "composition"; `selector_value` its text form.
std::string render_restriction(const std::string& lambda_text, const std::string& selector_key,
                               const std::string& selector_value, const Sl2Decomposition& dec,
                               Format format, bool with_character = false);

// Grid of lowest types, rows m = 0..max_m, columns d = 0..max_d.
std::string render_table(int max_m, int max_d, Format format);

std::string render_bound_report(const BoundReport& report, Format format);

// Summary of a pass/fail property sweep; `violations` rows are rendered as-is.
struct CheckReport {
  std::string target;
  std::vector<std::pair<std::string, std::string>> params;  // ordered key/value
  long long checked = 0;
  std::vector<std::string> violations;
};

std::string render_check_report(const CheckReport& report, Format format);

}  // namespace lowtype
