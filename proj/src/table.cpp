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

#include "lis/table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <system_error>

#include "lis/errors.hpp"

namespace lis
{
    namespace
    {
        std::string format_number(double v)
        {
            if (std::isnan(v))
                return "nan";
            if (std::isinf(v))
                return v > 0 ? "inf" : "-inf";
            char buf[40];
            auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
            return std::string(buf, res.ptr);
        }

        double parse_number(std::string_view s)
        {
            if (s == "nan")
                return std::numeric_limits<double>::quiet_NaN();
            if (s == "inf")
                return std::numeric_limits<double>::infinity();
            if (s == "-inf")
                return -std::numeric_limits<double>::infinity();
            double v = 0.0;
            auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            if (res.ec != std::errc() || res.ptr != s.data() + s.size())
                throw std::invalid_argument("not a number: '" + std::string(s) + "'");
            return v;
        }

        std::string quote_field(const std::string &field)
        {
            if (field.find_first_of(",\"\r\n") == std::string::npos)
                return field;
            std::string out = "\"";
            for (char ch : field)
            {
                if (ch == '"')
                    out += '"';
                out += ch;
            }
            out += '"';
            return out;
        }

        // Splits RFC 4180 text into records of fields
        std::vector<std::vector<std::string>> split_csv(std::string_view text)
        {
            std::vector<std::vector<std::string>> records;
            std::vector<std::string> record;
            std::string field;
            bool quoted = false, field_started = false;
            for (std::size_t i = 0; i < text.size(); ++i)
            {
                const char ch = text[i];
                if (quoted)
                {
                    if (ch == '"')
                    {
                        if (i + 1 < text.size() && text[i + 1] == '"')
                        {
                            field += '"';
                            ++i;
                        }
                        else
                            quoted = false;
                    }
                    else
                        field += ch;
                    continue;
                }
                if (ch == '"')
                {
                    quoted = true;
                    field_started = true;
                }
                else if (ch == ',')
                {
                    record.push_back(std::move(field));
                    field.clear();
                    field_started = true;
                }
                else if (ch == '\r' || ch == '\n')
                {
                    if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n')
                        ++i;
                    record.push_back(std::move(field));
                    field.clear();
                    records.push_back(std::move(record));
                    record.clear();
                    field_started = false;
                }
                else
                {
                    field += ch;
                    field_started = true;
                }
            }
            if (quoted)
                throw std::invalid_argument("unterminated quoted CSV field");
            if (field_started || !record.empty())
            {
                record.push_back(std::move(field));
                records.push_back(std::move(record));
            }
            return records;
        }
    }

    ResultTable::ResultTable(std::vector<std::string> column_names)
    {
        for (auto &name : column_names)
            columns_.push_back({std::move(name), {}});
    }

    void ResultTable::add_row(std::initializer_list<double> row)
    {
        add_row(std::vector<double>(row));
    }

    void ResultTable::add_row(const std::vector<double> &row)
    {
        if (row.size() != columns_.size())
            throw std::invalid_argument("row has " + std::to_string(row.size()) + " values, table has " +
                                        std::to_string(columns_.size()) + " columns");
        for (std::size_t i = 0; i < row.size(); ++i)
            columns_[i].values.push_back(row[i]);
    }

    std::size_t ResultTable::rows() const
    {
        return columns_.empty() ? 0 : columns_.front().values.size();
    }

    const Column &ResultTable::column(std::string_view name) const
    {
        for (const auto &c : columns_)
            if (c.name == name)
                return c;
        throw std::out_of_range("no column named '" + std::string(name) + "'");
    }

    bool ResultTable::operator==(const ResultTable &other) const
    {
        if (metadata_ != other.metadata_ || columns_.size() != other.columns_.size())
            return false;
        for (std::size_t c = 0; c < columns_.size(); ++c)
        {
            const auto &a = columns_[c], &b = other.columns_[c];
            if (a.name != b.name || a.values.size() != b.values.size())
                return false;
            for (std::size_t i = 0; i < a.values.size(); ++i)
                if (!(a.values[i] == b.values[i] || (std::isnan(a.values[i]) && std::isnan(b.values[i]))))
                    return false;
        }
        return true;
    }

    TableFormat table_format_from_name(std::string_view name)
    {
        if (name == "csv")
            return TableFormat::CSV;
        if (name == "json")
            return TableFormat::JSON;
        throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
    }

    std::string to_csv(const ResultTable &table)
    {
        std::string out;
        const auto &cols = table.columns();
        for (std::size_t c = 0; c < cols.size(); ++c)
        {
            if (c)
                out += ',';
            out += quote_field(cols[c].name);
        }
        out += "\r\n";
        for (std::size_t r = 0; r < table.rows(); ++r)
        {
            for (std::size_t c = 0; c < cols.size(); ++c)
            {
                if (c)
                    out += ',';
                out += format_number(cols[c].values[r]);
            }
            out += "\r\n";
        }
        return out;
    }

    std::string to_json(const ResultTable &table)
    {
        nlohmann::ordered_json doc;
        doc["metadata"] = table.metadata();
        nlohmann::ordered_json columns = nlohmann::ordered_json::object();
        for (const auto &col : table.columns())
        {
            nlohmann::ordered_json values = nlohmann::ordered_json::array();
            for (double v : col.values)
            {
                if (std::isfinite(v))
                    values.push_back(v);
                else
                    values.push_back(format_number(v));
            }
            columns[col.name] = std::move(values);
        }
        doc["columns"] = std::move(columns);
        return doc.dump(2) + "\n";
    }

    ResultTable parse_csv(std::string_view text)
    {
        auto records = split_csv(text);
        if (records.empty())
            return ResultTable();
        ResultTable table(records.front());
        for (std::size_t r = 1; r < records.size(); ++r)
        {
            std::vector<double> row;
            row.reserve(records[r].size());
            for (const auto &field : records[r])
                row.push_back(parse_number(field));
            table.add_row(row);
        }
        return table;
    }

    ResultTable parse_json(std::string_view text)
    {
        const auto doc = nlohmann::ordered_json::parse(text);
        std::vector<std::string> names;
        for (const auto &[name, values] : doc.at("columns").items())
            names.push_back(name);
        ResultTable table(names);
        std::size_t rows = names.empty() ? 0 : doc.at("columns").at(names.front()).size();
        for (std::size_t r = 0; r < rows; ++r)
        {
            std::vector<double> row;
            for (const auto &name : names)
            {
                const auto &v = doc.at("columns").at(name).at(r);
                row.push_back(v.is_string() ? parse_number(v.get<std::string>()) : v.get<double>());
            }
            table.add_row(row);
        }
        table.metadata() = doc.at("metadata");
        return table;
    }

    void emit_table(const ResultTable &table, const std::filesystem::path &path, TableFormat format)
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + path.string() + "' for writing");
        out << (format == TableFormat::CSV ? to_csv(table) : to_json(table));
        out.flush();
        if (!out)
            throw IoError("failed writing '" + path.string() + "'");
    }
}
