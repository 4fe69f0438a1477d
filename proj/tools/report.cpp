#include "report.hpp"

#include <algorithm>
#include <ostream>

#include "weilzeta/error.hpp"

namespace weilzeta::cli {

namespace {

bool is_plain_scalar(const Json& j) { return j.is_number() || j.is_boolean(); }

// Unquoted CSV text that is read back as a number or bool.
bool infers_scalar(std::string_view text, Json* out = nullptr) {
  if (text.empty()) return false;
  const char c = text.front();
  if (!(c == '-' || (c >= '0' && c <= '9') || text == "true" || text == "false")) return false;
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !is_plain_scalar(j)) return false;
  if (out) *out = std::move(j);
  return true;
}

std::string cell_text(const Json& j) {
  if (is_plain_scalar(j)) return j.dump();
  if (!j.is_string()) throw Error("report cell must be a scalar");
  return j.get<std::string>();
}

std::string csv_cell(const Json& j) {
  if (is_plain_scalar(j)) return j.dump();
  const std::string s = cell_text(j);
  const bool quote = s.empty() || infers_scalar(s) || s.find_first_of(",\"\n\r") != std::string::npos ||
                     s.front() == ' ' || s.back() == ' ' || s.front() == '#';
  if (!quote) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// Splits one CSV record; quoted cells stay strings, others are inferred.
std::vector<Json> csv_split(std::string_view line) {
  std::vector<Json> cells;
  std::size_t i = 0;
  while (true) {
    if (i < line.size() && line[i] == '"') {
      std::string s;
      ++i;
      while (true) {
        if (i >= line.size()) throw Error("report parse: unterminated quote");
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            s += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        s += line[i++];
      }
      cells.emplace_back(s);
    } else {
      const std::size_t end = std::min(line.find(',', i), line.size());
      const std::string_view raw = line.substr(i, end - i);
      Json j;
      if (infers_scalar(raw, &j)) cells.push_back(std::move(j));
      else cells.emplace_back(std::string(raw));
      i = end;
    }
    if (i >= line.size()) break;
    if (line[i] != ',') throw Error("report parse: expected ',' after quoted cell");
    ++i;
  }
  return cells;
}

void emit_csv(const Report& r, std::ostream& out) {
  for (const auto& [k, v] : r.meta) out << "# " << k << ": " << csv_cell(v) << '\n';
  for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << csv_cell(Json(r.columns[i]));
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

void emit_json(const Report& r, std::ostream& out) {
  out << "{\n  \"meta\": {";
  for (std::size_t i = 0; i < r.meta.size(); ++i) {
    out << (i ? ",\n" : "\n") << "    " << Json(r.meta[i].first).dump() << ": " << r.meta[i].second.dump();
  }
  out << (r.meta.empty() ? "},\n" : "\n  },\n");
  out << "  \"columns\": " << Json(r.columns).dump(-1, ' ', false) << ",\n  \"rows\": [";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    out << (i ? ",\n" : "\n") << "    [";
    for (std::size_t j = 0; j < r.rows[i].size(); ++j) out << (j ? ", " : "") << r.rows[i][j].dump();
    out << ']';
  }
  out << (r.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

void emit_table(const Report& r, std::ostream& out) {
  for (const auto& [k, v] : r.meta) out << k << ": " << cell_text(v) << '\n';
  if (r.columns.empty()) return;
  if (!r.meta.empty()) out << '\n';
  std::vector<std::size_t> width(r.columns.size());
  for (std::size_t i = 0; i < width.size(); ++i) width[i] = r.columns[i].size();
  for (const auto& row : r.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], cell_text(row[i]).size());
  auto pad = [&](const std::string& s, std::size_t w, bool right) {
    const std::string fill(w - s.size(), ' ');
    out << (right ? fill + s : s + fill);
  };
  for (std::size_t i = 0; i < width.size(); ++i) {
    if (i) out << "  ";
    const bool right = !r.rows.empty() && is_plain_scalar(r.rows[0][i]);
    pad(r.columns[i], width[i], right);
  }
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      pad(cell_text(row[i]), width[i], is_plain_scalar(row[i]));
    }
    out << '\n';
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "table") return Format::table;
  throw Error("unknown format: " + std::string(name));
}

void emit(const Report& r, Format f, std::ostream& out) {
  switch (f) {
    case Format::csv: emit_csv(r, out); break;
    case Format::json: emit_json(r, out); break;
    case Format::table: emit_table(r, out); break;
  }
}

Report parse_report(std::string_view text, Format f) {
  Report r;
  if (f == Format::json) {
    const Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw Error("report parse: invalid JSON");
    for (const auto& [k, v] : j.at("meta").items()) r.add_meta(k, v);
    r.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& row : j.at("rows")) r.rows.push_back(row.get<std::vector<Json>>());
    return r;
  }
  if (f != Format::csv) throw Error("report parse: only csv and json can be read back");
  bool header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!header && line.starts_with("# ")) {
      const std::size_t colon = line.find(": ");
      if (colon == std::string_view::npos) throw Error("report parse: meta line without ': '");
      const auto cells = csv_split(line.substr(colon + 2));
      if (cells.size() != 1) throw Error("report parse: meta value must be a single cell");
      r.add_meta(std::string(line.substr(2, colon - 2)), cells[0]);
    } else if (!header) {
      for (const auto& c : csv_split(line)) r.columns.push_back(cell_text(c));
      header = true;
    } else {
      r.rows.push_back(csv_split(line));
    }
  }
  return r;
}

}  // namespace weilzeta::cli
