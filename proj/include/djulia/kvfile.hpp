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

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "djulia/errors.hpp"

namespace djulia {

// `key = value` file with '#' comments, shared by the module and family
// input formats.

inline std::string kv_strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct KvFile {
  std::map<std::string, std::string> kv;

  static KvFile parse(const std::string& text) {
    KvFile f;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      size_t hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      line = kv_strip(line);
      if (line.empty()) continue;
      size_t eq = line.find('=');
      require(eq != std::string::npos, Err::ParseError,
              "expected `key = value`, got: " + line);
      std::string key = kv_strip(line.substr(0, eq));
      std::string val = kv_strip(line.substr(eq + 1));
      require(!key.empty() && !val.empty(), Err::ParseError,
              "empty key or value in: " + line);
      require(!f.kv.count(key), Err::ParseError, "duplicate key: " + key);
      f.kv[key] = val;
    }
    return f;
  }

  const std::string& at(const std::string& key) const {
    auto it = kv.find(key);
    require(it != kv.end(), Err::ParseError, "missing key: " + key);
    return it->second;
  }
};

// Splits `[a, b, ...]` at top-level commas (parentheses nest).
inline std::vector<std::string> kv_split_list(const std::string& val) {
  require(val.size() >= 2 && val.front() == '[' && val.back() == ']',
          Err::ParseError, "expected a [a, b, ...] list, got: " + val);
  std::vector<std::string> out;
  std::string body = val.substr(1, val.size() - 2);
  int depth = 0;
  std::string cur;
  for (char ch : body) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(kv_strip(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!kv_strip(cur).empty() || !out.empty()) out.push_back(kv_strip(cur));
  for (const auto& s : out)
    require(!s.empty(), Err::ParseError, "empty entry in list: " + val);
  return out;
}

}  // namespace djulia
