// Copyright 2026 The falqon Authors
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

/**
 * @file
 * Text helpers shared by the file formats: 17-significant-digit reals and a
 * minimal CSV table (no quoting; fields never contain commas).
 */

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace falqon::io {

/// "%.17g": parsing the result recovers the exact double.
[[nodiscard]] std::string format_real(double value);

/// Whole-string parse; throws InvalidArgument on trailing garbage.
[[nodiscard]] double parse_real(std::string_view text);
[[nodiscard]] std::uint64_t parse_u64(std::string_view text);

[[nodiscard]] std::vector<std::string> split(std::string_view line, char sep);
[[nodiscard]] std::string_view trim(std::string_view s);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of a named column; throws InvalidArgument when absent.
    [[nodiscard]] std::size_t column(std::string_view name) const;
};

[[nodiscard]] std::string format_csv(const CsvTable &table);
[[nodiscard]] CsvTable parse_csv(std::istream &in);

/// Writes bytes verbatim (binary mode, so LF stays LF).
void write_file(const std::string &path, std::string_view contents);
[[nodiscard]] std::string read_file(const std::string &path);

} // namespace falqon::io
