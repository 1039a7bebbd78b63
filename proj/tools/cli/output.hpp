#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace qcat::cli {

enum class OutputFormat { TABLE, JSON, CSV };

/// Throws qcat::ParseError on anything but table, json or csv.
OutputFormat parse_format(std::string_view text);

/// What a subcommand produced. JSON always carries the full result; the
/// table/csv views use `header` and `rows`, unless `bare` is set, in which
/// case table mode prints just that string.
struct Output {
  nlohmann::ordered_json json = nlohmann::ordered_json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::optional<std::string> bare;
  std::vector<std::string> notes;  // extra table-mode lines after the rows
};

void render(const Output& output, OutputFormat format, std::ostream& os);

}  // namespace qcat::cli
