// Copyright 2026 The Fuelcell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace fuelcell::cli {

/// Round-trip-exact decimal rendering of a double (%.17g).
std::string format_double(double v);

/// Minimal CSV writer: header first, then rows of pre-rendered cells.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void header(const std::vector<std::string>& columns);
    void row(const std::vector<std::string>& cells);
    void close();

private:
    std::FILE* file_ = nullptr;
    std::string path_;
    std::size_t columns_ = 0;
};

}  // namespace fuelcell::cli
