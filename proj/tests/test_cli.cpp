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

#include <cstdio>
#include <filesystem>
#include <string>

#include "djulia/csv.hpp"
#include "djulia/errors.hpp"
#include "doctest.h"

using namespace djulia;

TEST_CASE("fields are quoted only when necessary") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("3/8") == "3/8");  // rationals pass through bare
  CHECK(csv_escape("") == "");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("emit produces LF rows with minimal quoting") {
  std::vector<CsvRow> rows = {{"beta", "mu"}, {"t+1", "3/8"}, {"a,b", "x\"y"}};
  CHECK(csv_emit(rows) == "beta,mu\nt+1,3/8\n\"a,b\",\"x\"\"y\"\n");
}

TEST_CASE("parse inverts emit on awkward fields") {
  std::vector<CsvRow> rows = {
      {"label", "value"},
      {"comma,inside", "quote\"inside"},
      {"multi\nline", ""},
      {"", "trailing"},
  };
  CHECK(csv_parse(csv_emit(rows)) == rows);
}

TEST_CASE("CRLF input and doubled quotes are accepted") {
  auto rows = csv_parse("a,b\r\n\"c\"\"d\",e\r\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == CsvRow{"a", "b"});
  CHECK(rows[1] == CsvRow{"c\"d", "e"});
}

TEST_CASE("blank lines and missing final newline") {
  auto rows = csv_parse("a,b\n\nc");
  REQUIRE(rows.size() == 3);
  CHECK(rows[1] == CsvRow{""});  // blank line: one empty field
  CHECK(rows[2] == CsvRow{"c"});
  CHECK(csv_parse("").empty());
  CHECK(csv_parse("\"\"").size() == 1);  // quoted empty field is a row
}

TEST_CASE("malformed quoting is rejected") {
  CHECK_THROWS_AS(csv_parse("\"open"), Error);
  CHECK_THROWS_AS(csv_parse("ab\"c"), Error);
}

TEST_CASE("file round trip and io errors") {
  namespace fs = std::filesystem;
  fs::path p = fs::temp_directory_path() / "djulia_csv_roundtrip.csv";
  std::vector<CsvRow> rows = {{"h", "x,y"}, {"1", "a\nb"}};
  csv_write_file(p.string(), rows);
  CHECK(csv_read_file(p.string()) == rows);
  fs::remove(p);

  CHECK_THROWS_AS(csv_read_file(p.string()), Error);  // now gone
  CHECK_THROWS_AS(
      csv_write_file("/nonexistent-dir-for-tests/out.csv", rows), Error);
}
