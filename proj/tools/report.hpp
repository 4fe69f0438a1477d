#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace weilzeta::cli {

using Json = nlohmann::ordered_json;

enum class Format { csv, json, table };

Format parse_format(std::string_view name);

// A report is a list of key/value facts followed by one table. Cells are JSON
// scalars (integer, real, string, bool); reals print in shortest round-trip form.
struct Report {
  std::vector<std::pair<std::string, Json>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;

  void add_meta(std::string key, Json value) { meta.emplace_back(std::move(key), std::move(value)); }
};

void emit(const Report& r, Format f, std::ostream& out);

// Inverse of emit for csv and json.
Report parse_report(std::string_view text, Format f);

}  // namespace weilzeta::cli
