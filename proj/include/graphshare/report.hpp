// Copyright 2026 The graphshare Authors.
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


// Report lines are "<record> key=value ...". Values run to the next space
// unless double-quoted. A bare token after the record (as in "value 1/1") is
// stored under the record name.

#ifndef GRAPHSHARE_REPORT_HPP_
#define GRAPHSHARE_REPORT_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace graphshare {

struct ReportLine {
  std::string record;
  std::map<std::string, std::string> fields;

  const std::string& at(const std::string& key) const { return fields.at(key); }
  bool has(const std::string& key) const { return fields.count(key) > 0; }
};

inline std::optional<ReportLine> parse_report_line(std::string_view line) {
  ReportLine out;
  std::size_t i = 0;
  auto skip_spaces = [&] {
    while (i < line.size() && line[i] == ' ') ++i;
  };
  skip_spaces();
  const std::size_t start = i;
  while (i < line.size() && line[i] != ' ') ++i;
  out.record = std::string(line.substr(start, i - start));
  if (out.record.empty() || out.record.find('=') != std::string::npos) return std::nullopt;
  while (true) {
    skip_spaces();
    if (i >= line.size()) break;
    const std::size_t key_start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '=') ++i;
    std::string key(line.substr(key_start, i - key_start));
    if (i >= line.size() || line[i] == ' ') {
      if (out.fields.count(out.record)) return std::nullopt;
      out.fields[out.record] = key;
      continue;
    }
    ++i;  // '='
    std::string value;
    if (i < line.size() && line[i] == '"') {
      const std::size_t close = line.find('"', i + 1);
      if (close == std::string_view::npos) return std::nullopt;
      value = std::string(line.substr(i + 1, close - i - 1));
      i = close + 1;
    } else {
      const std::size_t value_start = i;
      while (i < line.size() && line[i] != ' ') ++i;
      value = std::string(line.substr(value_start, i - value_start));
    }
    if (key.empty() || !out.fields.emplace(std::move(key), std::move(value)).second) return std::nullopt;
  }
  return out;
}

}  // namespace graphshare

#endif  // GRAPHSHARE_REPORT_HPP_
