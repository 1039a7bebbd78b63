#include "output.hpp"

#include <algorithm>

#include "qcat/errors.hpp"

namespace qcat::cli {

OutputFormat parse_format(std::string_view text) {
  if (text == "table") return OutputFormat::TABLE;
  if (text == "json") return OutputFormat::JSON;
  if (text == "csv") return OutputFormat::CSV;
  throw ParseError("unknown output format '" + std::string(text) + "'");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

void write_csv_row(const std::vector<std::string>& row, std::ostream& os) {
  for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
  os << '\n';
}

void write_table(const Output& output, std::ostream& os) {
  std::vector<std::size_t> width(output.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  };
  widen(output.header);
  for (const auto& row : output.rows) widen(row);
  auto line = [&](const std::vector<std::string>& row) {
    std::string text;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text += "  ";
      text += row[i];
      if (i + 1 < row.size()) text.append(width[i] - row[i].size(), ' ');
    }
    text.erase(text.find_last_not_of(' ') + 1);
    os << text << '\n';
  };
  if (!output.header.empty()) line(output.header);
  for (const auto& row : output.rows) line(row);
  for (const auto& note : output.notes) os << note << '\n';
}

}  // namespace

void render(const Output& output, OutputFormat format, std::ostream& os) {
  switch (format) {
    case OutputFormat::JSON:
      os << output.json.dump(2) << '\n';
      return;
    case OutputFormat::CSV:
      if (!output.header.empty()) write_csv_row(output.header, os);
      for (const auto& row : output.rows) write_csv_row(row, os);
      return;
    case OutputFormat::TABLE:
      if (output.bare) {
        os << *output.bare << '\n';
        return;
      }
      write_table(output, os);
      return;
  }
}

}  // namespace qcat::cli
