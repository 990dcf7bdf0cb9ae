#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qvitali/qmeasure.hpp"

namespace qvitali {

enum class OutputFormat { Plain, Csv, Json };

std::optional<OutputFormat> parse_format(std::string_view name);

// Fixed notation with `precision` fractional digits, trailing zeros and a
// bare trailing point removed ("2", "0.810930216216"). +inf renders as
// "inf". Locale independent.
std::string format_decimal(double value, int precision);
std::string format_measure(const MeasureValue& m, int precision);

/// A small table rendered as aligned text, CSV, or a JSON object
/// {"rows": [...], "notes": [...]}. Numeric cells are emitted as JSON numbers
/// except "inf", which stays a string.
struct Table {
  struct Cell {
    std::string text;
    bool numeric = false;
  };

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // CSV: "# " comment lines after the rows. Plain: trailing lines.
  std::vector<std::string> notes;

  static Cell text(std::string s) { return {std::move(s), false}; }
  static Cell number(std::string s) { return {std::move(s), true}; }
};

std::string render(const Table& table, OutputFormat format);

} // namespace qvitali
