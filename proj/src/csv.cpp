// Copyright 2026 the djulia authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "djulia/csv.hpp"

#include <fstream>
#include <sstream>

#include "djulia/errors.hpp"

namespace djulia {

std::string csv_escape(const std::string& field) {
  bool needs_quotes = field.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_emit(const std::vector<CsvRow>& rows) {
  std::string out;
  for (const CsvRow& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(row[i]);
    }
    out += '\n';
  }
  return out;
}

void csv_write_file(const std::string& path, const std::vector<CsvRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Err::IOError, "cannot open for writing: " + path);
  out << csv_emit(rows);
  require(out.good(), Err::IOError, "write failed: " + path);
}

std::vector<CsvRow> csv_parse(const std::string& text) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  bool in_quotes = false, field_started = false;
  size_t i = 0, n = text.size();
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };
  while (i < n) {
    char c = text[i];
    if (in_quotes) {
      require(c != '\0', Err::ParseError, "NUL byte inside quoted field");
      if (c == '"') {
        if (i + 1 < n && text[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        in_quotes = false;
        ++i;
        continue;
      }
      field += c;
      ++i;
      continue;
    }
    if (c == '"') {
      require(field.empty() && !field_started, Err::ParseError,
              "quote inside unquoted field");
      in_quotes = true;
      field_started = true;
      ++i;
      continue;
    }
    if (c == ',') {
      end_field();
      ++i;
      continue;
    }
    if (c == '\r' && i + 1 < n && text[i + 1] == '\n') {
      end_row();
      i += 2;
      continue;
    }
    if (c == '\n') {
      end_row();
      ++i;
      continue;
    }
    field += c;
    field_started = true;
    ++i;
  }
  require(!in_quotes, Err::ParseError, "unterminated quoted field");
  // A trailing line without a final newline still counts as a row.
  if (field_started || !field.empty() || !row.empty()) end_row();
  return rows;
}

std::vector<CsvRow> csv_read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Err::IOError, "cannot read: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return csv_parse(ss.str());
}

}  // namespace djulia
