#ifndef KNOTINV_RECORDS_HPP
#define KNOTINV_RECORDS_HPP

#include <algorithm>
#include <cctype>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotinv/error.hpp"

namespace knotinv {

struct KnotRecord {
  std::string name;
  std::optional<std::string> pd_text;
  std::optional<std::string> jones_text;
  /// 1-based line of the record in its source.
  int line = 0;
};

inline std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return std::string(s.substr(b, s.find_last_not_of(ws) - b + 1));
}

/// One PD per line, optionally prefixed by "name:".  Blank lines and lines
/// starting with '#' are skipped.  Unnamed records are named by line number.
inline std::vector<KnotRecord> read_pd_records(std::istream& in) {
  std::vector<KnotRecord> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    KnotRecord r;
    r.line = number;
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
      r.name = trim(std::string_view(text).substr(0, colon));
      r.pd_text = trim(std::string_view(text).substr(colon + 1));
    } else {
      r.name = "line " + std::to_string(number);
      r.pd_text = text;
    }
    out.push_back(std::move(r));
  }
  return out;
}

namespace detail {

/// Splits CSV text into rows of fields.  Fields may be double-quoted, with
/// "" standing for a quote; quoted fields may span lines.
inline std::vector<std::pair<int, std::vector<std::string>>> csv_rows(std::istream& in) {
  std::vector<std::pair<int, std::vector<std::string>>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, was_quoted = false;
  int line = 1, row_line = 1;
  auto end_field = [&] {
    row.push_back(was_quoted ? field : trim(field));
    field.clear();
    was_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    if (!(row.size() == 1 && row[0].empty())) rows.emplace_back(row_line, std::move(row));
    row.clear();
  };
  char ch;
  while (in.get(ch)) {
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        if (ch == '\n') ++line;
        field += ch;
      }
      continue;
    }
    switch (ch) {
      case '"':
        if (!trim(field).empty()) throw ParseError("line " + std::to_string(line) + ": quote inside an unquoted field");
        field.clear();
        quoted = true;
        was_quoted = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        row_line = ++line;
        break;
      default:
        if (was_quoted && !std::isspace(static_cast<unsigned char>(ch)))
          throw ParseError("line " + std::to_string(line) + ": text after a closing quote");
        if (!was_quoted) field += ch;
    }
  }
  if (quoted) throw ParseError("line " + std::to_string(line) + ": unterminated quoted field");
  if (!field.empty() || !row.empty() || was_quoted) end_row();
  return rows;
}

}  // namespace detail

/// CSV with a header row naming at least `name` and `jones`; a `pd` column
/// is optional.  Other columns are ignored.  Empty cells count as absent.
inline std::vector<KnotRecord> read_csv_records(std::istream& in) {
  const auto rows = detail::csv_rows(in);
  if (rows.empty()) throw ParseError("CSV has no header row");
  const auto& header = rows.front().second;
  auto column = [&](const std::string& name) -> int {
    const auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<int>(it - header.begin());
  };
  const int name_col = column("name"), jones_col = column("jones"), pd_col = column("pd");
  if (name_col < 0 || jones_col < 0) throw ParseError("CSV header must contain the columns name and jones");
  std::vector<KnotRecord> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& [line, cells] = rows[r];
    if (cells.size() != header.size())
      throw ParseError("line " + std::to_string(line) + ": expected " + std::to_string(header.size()) + " fields, got " +
                       std::to_string(cells.size()));
    KnotRecord k;
    k.line = line;
    k.name = cells[name_col];
    if (!cells[jones_col].empty()) k.jones_text = cells[jones_col];
    if (pd_col >= 0 && !cells[pd_col].empty()) k.pd_text = cells[pd_col];
    if (!k.jones_text && !k.pd_text)
      throw ParseError("line " + std::to_string(line) + ": record has neither a Jones polynomial nor a PD code");
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace knotinv

#endif  // KNOTINV_RECORDS_HPP
