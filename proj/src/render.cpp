#include "lowtype/render.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "lowtype/json_io.hpp"

namespace lowtype {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "md") return Format::md;
  if (text == "plain") return Format::plain;
  throw std::invalid_argument("unknown format: '" + text + "'");
}

namespace {

std::string dump_line(const Json& j) { return j.dump() + "\n"; }

void append_decomposition_plain(std::ostringstream& os, const Sl2Decomposition& dec) {
  os << "mults:";
  for (const BigInt& a : dec.mults()) os << " " << a;
  os << "\n";
  if (dec.is_zero()) {
    os << "lowest: -\nhighest: -\n";
  } else {
    os << "lowest: " << dec.lowest() << "\nhighest: " << dec.highest() << "\n";
  }
  os << "dim: " << dec.dim() << "\n";
}

std::string decomposition_csv(const Sl2Decomposition& dec) {
  std::ostringstream os;
  os << "j,multiplicity\n";
  for (std::size_t j = 0; j < dec.mults().size(); ++j) {
    os << j << "," << dec.mults()[j] << "\n";
  }
  return os.str();
}

std::string decomposition_md(const Sl2Decomposition& dec) {
  std::ostringstream os;
  os << "| j | multiplicity of F_j |\n|---|---|\n";
  for (std::size_t j = 0; j < dec.mults().size(); ++j) {
    os << "| " << j << " | " << dec.mults()[j] << " |\n";
  }
  return os.str();
}

}  // namespace

std::string render_decomposition(const Sl2Decomposition& dec, Format format,
                                 bool with_character) {
  switch (format) {
    case Format::json: {
      Json j = decomposition_to_json(dec);
      if (with_character) j["character"] = laurent_to_json(dec.character());
      return dump_line(j);
    }
    case Format::csv:
      return decomposition_csv(dec);
    case Format::md:
      return decomposition_md(dec);
    case Format::plain: {
      std::ostringstream os;
      append_decomposition_plain(os, dec);
      if (with_character) os << "character: " << dec.character().str() << "\n";
      return os.str();
    }
  }
  throw std::logic_error("unhandled format");
}

std::string render_restriction(const std::string& lambda_text, const std::string& selector_key,
                               const std::string& selector_value, const Sl2Decomposition& dec,
                               Format format, bool with_character) {
  const int min_dim = dec.is_zero() ? 0 : dec.lowest() + 1;
  switch (format) {
    case Format::json: {
      Json j;
      j["lambda"] = lambda_text;
      if (selector_key == "n") {
        j["n"] = std::stoi(selector_value);
      } else {
        j[selector_key] = selector_value;
      }
      Json body = decomposition_to_json(dec);
      for (auto& [key, value] : body.items()) j[key] = std::move(value);
      j["min_dim"] = min_dim;
      if (with_character) j["character"] = laurent_to_json(dec.character());
      return dump_line(j);
    }
    case Format::csv:
      return decomposition_csv(dec);
    case Format::md:
      return decomposition_md(dec);
    case Format::plain: {
      std::ostringstream os;
      os << "lambda: " << lambda_text << "\n" << selector_key << ": " << selector_value << "\n";
      append_decomposition_plain(os, dec);
      os << "min_dim: " << min_dim << "\n";
      if (with_character) os << "character: " << dec.character().str() << "\n";
      return os.str();
    }
  }
  throw std::logic_error("unhandled format");
}

std::string render_table(int max_m, int max_d, Format format) {
  if (max_m < 0 || max_d < 0) throw std::invalid_argument("table bounds must be non-negative");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(max_m) + 1);
  for (int m = 0; m <= max_m; ++m) {
    rows[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(max_d) + 1);
    for (int d = 0; d <= max_d; ++d) {
      rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)] = lowest_type(m, d);
    }
  }
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      Json j{{"max_m", max_m}, {"max_d", max_d}, {"rows", rows}};
      return dump_line(j);
    }
    case Format::csv:
      for (const auto& row : rows) {
        for (std::size_t d = 0; d < row.size(); ++d) {
          if (d > 0) os << ",";
          os << row[d];
        }
        os << "\n";
      }
      return os.str();
    case Format::md:
      os << "| m\\d |";
      for (int d = 0; d <= max_d; ++d) os << " " << d << " |";
      os << "\n|---|";
      for (int d = 0; d <= max_d; ++d) os << "---|";
      os << "\n";
      for (int m = 0; m <= max_m; ++m) {
        os << "| " << m << " |";
        for (int value : rows[static_cast<std::size_t>(m)]) os << " " << value << " |";
        os << "\n";
      }
      return os.str();
    case Format::plain: {
      const int width = 4;
      os << std::setw(width) << "m\\d";
      for (int d = 0; d <= max_d; ++d) os << std::setw(width) << d;
      os << "\n";
      for (int m = 0; m <= max_m; ++m) {
        os << std::setw(width) << m;
        for (int value : rows[static_cast<std::size_t>(m)]) os << std::setw(width) << value;
        os << "\n";
      }
      return os.str();
    }
  }
  throw std::logic_error("unhandled format");
}

std::string render_bound_report(const BoundReport& report, Format format) {
  switch (format) {
    case Format::json:
      return dump_line(bound_report_to_json(report));
    case Format::csv: {
      std::ostringstream os;
      os << "lambda,min_dim\n";
      for (const auto& [lambda, dim] : report.witnesses) {
        os << "\"" << lambda.str() << "\"," << dim << "\n";
      }
      return os.str();
    }
    case Format::md: {
      std::ostringstream os;
      os << "| field | value |\n|---|---|\n"
         << "| n | " << report.n << " |\n"
         << "| max_boxes | " << report.max_boxes << " |\n"
         << "| checked | " << report.checked << " |\n"
         << "| max_min_dim | " << report.max_min_dim_found << " |\n"
         << "| witnesses | " << report.witnesses.size() << " |\n"
         << "| violations | " << report.violations.size() << " |\n";
      return os.str();
    }
    case Format::plain: {
      std::ostringstream os;
      os << "n: " << report.n << "\nmax_boxes: " << report.max_boxes
         << "\nchecked: " << report.checked << "\nmax_min_dim: " << report.max_min_dim_found
         << "\nwitnesses:";
      for (const auto& [lambda, dim] : report.witnesses) {
        os << " (" << lambda.str() << ")=" << dim;
      }
      os << "\nviolations:";
      for (const auto& lambda : report.violations) os << " (" << lambda.str() << ")";
      os << "\n";
      return os.str();
    }
  }
  throw std::logic_error("unhandled format");
}

std::string render_check_report(const CheckReport& report, Format format) {
  switch (format) {
    case Format::json: {
      Json j;
      j["target"] = report.target;
      for (const auto& [key, value] : report.params) {
        try {
          std::size_t used = 0;
          const long long as_int = std::stoll(value, &used);
          if (used == value.size()) {
            j[key] = as_int;
            continue;
          }
        } catch (const std::exception&) {
        }
        j[key] = value;
      }
      j["checked"] = report.checked;
      j["violations"] = report.violations;
      return dump_line(j);
    }
    case Format::csv: {
      std::ostringstream os;
      os << "violation\n";
      for (const auto& v : report.violations) os << "\"" << v << "\"\n";
      return os.str();
    }
    case Format::md: {
      std::ostringstream os;
      os << "| field | value |\n|---|---|\n| target | " << report.target << " |\n";
      for (const auto& [key, value] : report.params) {
        os << "| " << key << " | " << value << " |\n";
      }
      os << "| checked | " << report.checked << " |\n| violations | "
         << report.violations.size() << " |\n";
      return os.str();
    }
    case Format::plain: {
      std::ostringstream os;
      os << "target: " << report.target << "\n";
      for (const auto& [key, value] : report.params) os << key << ": " << value << "\n";
      os << "checked: " << report.checked << "\nviolations: " << report.violations.size() << "\n";
      for (const auto& v : report.violations) os << "  " << v << "\n";
      return os.str();
    }
  }
  throw std::logic_error("unhandled format");
}

}  // namespace lowtype
