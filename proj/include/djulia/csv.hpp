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

#pragma once

#include <string>
#include <vector>

namespace djulia {

// RFC 4180 comma-separated values.  Output uses `\n` line endings and
// quotes a field only when it contains a comma, a quote, or a newline;
// input accepts both `\n` and `\r\n` and quoted fields with doubled quotes.

using CsvRow = std::vector<std::string>;

std::string csv_escape(const std::string& field);
std::string csv_emit(const std::vector<CsvRow>& rows);
void csv_write_file(const std::string& path, const std::vector<CsvRow>& rows);

std::vector<CsvRow> csv_parse(const std::string& text);
std::vector<CsvRow> csv_read_file(const std::string& path);

}  // namespace djulia
