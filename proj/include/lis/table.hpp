// SPDX-License-Identifier: Apache-2.0
//
// lis-precoding: precoding and power allocation for large intelligent surfaces
// Copyright (C) 2026 The lis-precoding authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace lis
{
    struct Column
    {
        std::string name;
        std::vector<double> values;

        bool operator==(const Column &) const = default;
    };

    // Named numeric columns of equal length plus a metadata object (config echo, version, seed, ...)
    class ResultTable
    {
    public:
        ResultTable() = default;
        explicit ResultTable(std::vector<std::string> column_names);

        // Appends a row; throws std::invalid_argument on a length mismatch
        void add_row(std::initializer_list<double> row);
        void add_row(const std::vector<double> &row);

        const std::vector<Column> &columns() const { return columns_; }
        std::size_t rows() const;
        const Column &column(std::string_view name) const; // throws std::out_of_range

        nlohmann::ordered_json &metadata() { return metadata_; }
        const nlohmann::ordered_json &metadata() const { return metadata_; }

        bool operator==(const ResultTable &other) const;

    private:
        std::vector<Column> columns_;
        nlohmann::ordered_json metadata_ = nlohmann::ordered_json::object();
    };

    enum class TableFormat
    {
        CSV,
        JSON
    };

    TableFormat table_format_from_name(std::string_view name); // "csv" or "json"

    // CSV: header row, RFC 4180 quoting, 17 significant digits, '.' decimal separator, CRLF line ends.
    // Metadata is not part of the CSV form.
    std::string to_csv(const ResultTable &table);

    // {"metadata": {...}, "columns": {"name": [values...], ...}}; non-finite values are written as strings
    std::string to_json(const ResultTable &table);

    ResultTable parse_csv(std::string_view text);
    ResultTable parse_json(std::string_view text);

    // Writes the table to path; throws IoError if the file cannot be written
    void emit_table(const ResultTable &table, const std::filesystem::path &path, TableFormat format);
}
