#include "qvitali/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace qvitali {

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string format_decimal(double value, int precision) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  std::vector<char> buf(static_cast<std::size_t>(precision) + 400);
  std::snprintf(buf.data(), buf.size(), "%.*f", precision, value);
  std::string s(buf.data());
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string format_measure(const MeasureValue& m, int precision) {
  return m.is_infinite() ? "inf" : format_decimal(m.value(), precision);
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_cell(const Table::Cell& c) {
  if (c.numeric && c.text != "inf" && c.text != "-inf" && c.text != "nan") return c.text;
  return json_string(c.text);
}

} // namespace

std::string render(const Table& table, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::Csv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out += (i ? "," : "") + csv_escape(table.columns[i]);
      }
      out += '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_escape(row[i].text);
        out += '\n';
      }
      for (const auto& n : table.notes) out += "# " + n + '\n';
      break;
    }
    case OutputFormat::Json: {
      out += "{\"rows\":[";
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out += r ? ",{" : "{";
        const auto& row = table.rows[r];
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
          out += (i ? "," : "") + json_string(table.columns[i]) + ":" + json_cell(row[i]);
        }
        out += "}";
      }
      out += "],\"notes\":[";
      for (std::size_t i = 0; i < table.notes.size(); ++i) out += (i ? "," : "") + json_string(table.notes[i]);
      out += "]}\n";
      break;
    }
    case OutputFormat::Plain: {
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
          width[i] = std::max(width[i], row[i].text.size());
        }
      }
      auto line = [&](auto cell_text, std::size_t n) {
        std::string l;
        for (std::size_t i = 0; i < n; ++i) {
          std::string t = cell_text(i);
          if (i + 1 < n) t.resize(std::max(t.size(), width[i]), ' ');
          l += (i ? "  " : "") + t;
        }
        out += l + '\n';
      };
      line([&](std::size_t i) { return table.columns[i]; }, table.columns.size());
      for (const auto& row : table.rows) line([&](std::size_t i) { return row[i].text; }, row.size());
      for (const auto& n : table.notes) out += "note: " + n + '\n';
      break;
    }
  }
  return out;
}

} // namespace qvitali
