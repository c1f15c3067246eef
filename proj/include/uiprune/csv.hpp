#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "uiprune/common.hpp"

namespace uiprune::csv {

/// One parsed record plus the 1-based line number it started on.
struct Row {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

/// RFC 4180 reader: quoted fields may contain commas, doubled quotes and
/// newlines. Blank lines are skipped.
inline std::vector<Row> parse(std::string_view text) {
  std::vector<Row> rows;
  Row cur;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  cur.line = 1;

  auto end_field = [&] {
    cur.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    if (!(cur.fields.empty() && field.empty() && !field_started)) {
      end_field();
      rows.push_back(std::move(cur));
    }
    cur = Row{};
    cur.line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        end_field();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        end_row();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  end_row();
  return rows;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path.string());
  out << content;
}

inline std::vector<Row> read(const std::filesystem::path& path) { return parse(read_file(path)); }

inline std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string format_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += escape(fields[i]);
  }
  out += '\n';
  return out;
}

/// Maps header names to column indices; throws if a required column is absent.
class Header {
 public:
  Header() = default;
  explicit Header(const Row& row) {
    for (std::size_t i = 0; i < row.fields.size(); ++i)
      index_[to_lower(trim(row.fields[i]))] = i;
  }

  bool has(std::string_view name) const { return index_.count(std::string(name)) > 0; }

  std::size_t require(std::string_view name, std::string_view file) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
      throw InputError(std::string(file) + ": missing column '" + std::string(name) + "'");
    return it->second;
  }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::map<std::string, std::size_t> index_;
};

inline const std::string& field(const Row& row, std::size_t i) {
  static const std::string empty;
  return i < row.fields.size() ? row.fields[i] : empty;
}

}  // namespace uiprune::csv
