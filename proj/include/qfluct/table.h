// Copyright 2026 The qfluct Authors
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

#ifndef QFLUCT_TABLE_H
#define QFLUCT_TABLE_H

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qfluct {

using Cell = std::variant<int64_t, double, std::string>;

/// Column-named rows of integers, reals and strings.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    Table() = default;
    explicit Table(std::vector<std::string> cols) : columns(std::move(cols)) {}

    /// Throws InvalidConfig if the row width does not match.
    void add_row(std::vector<Cell> row);
    /// Index of a column; InvalidConfig if absent.
    size_t column(std::string_view name) const;
    /// Numeric value of a cell (integers widen; strings parse or give NaN).
    double number(size_t row, std::string_view name) const;
    size_t size() const {
        return rows.size();
    }
};

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(std::string_view s);

/// Header plus one line per row; reals with 9 significant digits, NaN as "nan".
std::string to_csv(const Table &t);
/// Array of objects in column order; NaN becomes null.
std::string to_json(const Table &t);
Table parse_csv(std::string_view text);

/// Writes the table to `path` (format by argument). Io error when unwritable.
void write_table(const Table &t, const std::string &path, OutputFormat format);
void write_text(const std::string &path, std::string_view text);
std::string read_text(const std::string &path);

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
};

/// Minimal SVG line chart: axes with ticks, one polyline and legend entry per series.
std::string render_svg(const PlotSpec &spec);

/// Series of `y` against `x`, one per distinct value of `group`, from a table.
PlotSpec plot_from_table(const Table &t, const std::string &x, const std::string &y, const std::string &group);

}  // namespace qfluct

#endif
