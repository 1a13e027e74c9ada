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

#include "fuelcell/cli/csv.hpp"

#include <cerrno>
#include <cstring>

#include "fuelcell/errors.hpp"

namespace fuelcell::cli {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path) : path_(path) {
    file_ = std::fopen(path.c_str(), "w");
    if (!file_) {
        throw Error(ErrorCode::Io, "cannot write '" + path + "': " + std::strerror(errno), "out");
    }
}

CsvWriter::~CsvWriter() {
    if (file_) std::fclose(file_);
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    columns_ = columns.size();
    row(columns);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (columns_ != 0 && cells.size() != columns_) {
        throw Error(ErrorCode::Io, "CSV row width does not match header", "out");
    }
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) std::fputc(',', file_);
        std::fputs(cells[k].c_str(), file_);
    }
    std::fputc('\n', file_);
}

void CsvWriter::close() {
    if (file_ && std::fclose(file_) != 0) {
        file_ = nullptr;
        throw Error(ErrorCode::Io, "failed to finish '" + path_ + "'", "out");
    }
    file_ = nullptr;
}

}  // namespace fuelcell::cli
