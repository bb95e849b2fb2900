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

#include "qfluct/table.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qfluct/error.h"

namespace qfluct {

namespace {

std::string format_real(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string cell_text(const Cell &c) {
    if (const auto *i = std::get_if<int64_t>(&c)) {
        return std::to_string(*i);
    }
    if (const auto *d = std::get_if<double>(&c)) {
        return format_real(*d);
    }
    return std::get<std::string>(c);
}

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        out += ch;
        if (ch == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> out(1);
    bool quoted = false;
    for (size_t i = 0; i < line.size(); i++) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                out.back() += '"';
                i++;
            } else if (ch == '"') {
                quoted = false;
            } else {
                out.back() += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.emplace_back();
        } else {
            out.back() += ch;
        }
    }
    return out;
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw Error(ErrorKind::InvalidConfig,
                    "row has " + std::to_string(row.size()) + " cells, table has " + std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

size_t Table::column(std::string_view name) const {
    auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) {
        throw Error(ErrorKind::InvalidConfig, "no column named '" + std::string(name) + "'");
    }
    return size_t(it - columns.begin());
}

double Table::number(size_t row, std::string_view name) const {
    const Cell &c = rows.at(row).at(column(name));
    if (const auto *i = std::get_if<int64_t>(&c)) {
        return double(*i);
    }
    if (const auto *d = std::get_if<double>(&c)) {
        return *d;
    }
    const std::string &s = std::get<std::string>(c);
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    return end != s.c_str() && *end == '\0' ? v : std::numeric_limits<double>::quiet_NaN();
}

OutputFormat parse_format(std::string_view s) {
    if (s == "csv") {
        return OutputFormat::Csv;
    }
    if (s == "json") {
        return OutputFormat::Json;
    }
    throw Error(ErrorKind::InvalidConfig, "format must be csv or json, got '" + std::string(s) + "'");
}

std::string to_csv(const Table &t) {
    std::string out;
    for (size_t c = 0; c < t.columns.size(); c++) {
        out += (c ? "," : "") + csv_escape(t.columns[c]);
    }
    out += "\n";
    for (const auto &row : t.rows) {
        for (size_t c = 0; c < row.size(); c++) {
            out += (c ? "," : "") + csv_escape(cell_text(row[c]));
        }
        out += "\n";
    }
    return out;
}

std::string to_json(const Table &t) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (size_t c = 0; c < row.size(); c++) {
            const Cell &cell = row[c];
            if (const auto *i = std::get_if<int64_t>(&cell)) {
                obj[t.columns[c]] = *i;
            } else if (const auto *d = std::get_if<double>(&cell)) {
                // Same 9-digit rounding as the CSV so both outputs agree.
                obj[t.columns[c]] = std::isfinite(*d) ? nlohmann::ordered_json(std::stod(format_real(*d)))
                                                      : nlohmann::ordered_json(nullptr);
            } else {
                obj[t.columns[c]] = std::get<std::string>(cell);
            }
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

Table parse_csv(std::string_view text) {
    Table t;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(ErrorKind::InvalidConfig, "empty CSV");
    }
    t.columns = split_csv_line(line);
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<Cell> row;
        for (auto &s : split_csv_line(line)) {
            row.emplace_back(std::move(s));
        }
        t.add_row(std::move(row));
    }
    return t;
}

void write_text(const std::string &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
    }
    out.write(text.data(), std::streamsize(text.size()));
    if (!out) {
        throw Error(ErrorKind::Io, "write to '" + path + "' failed");
    }
}

std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_table(const Table &t, const std::string &path, OutputFormat format) {
    write_text(path, format == OutputFormat::Csv ? to_csv(t) : to_json(t));
}

namespace {

std::string xml_escape(const std::string &s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += ch;
        }
    }
    return out;
}

// Round step (1, 2 or 5 times a power of ten) giving about five ticks.
double tick_step(double span) {
    double raw = span / 5;
    double mag = std::pow(10, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0}) {
        if (m * mag >= raw) {
            return m * mag;
        }
    }
    return 10 * mag;
}

}  // namespace

std::string render_svg(const PlotSpec &spec) {
    const double width = 640, height = 440;
    const double left = 70, right = 150, top = 40, bottom = 60;
    const double pw = width - left - right, ph = height - top - bottom;
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto &s : spec.series) {
        for (size_t i = 0; i < s.x.size() && i < s.y.size(); i++) {
            if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
                x0 = std::min(x0, s.x[i]);
                x1 = std::max(x1, s.x[i]);
                y0 = std::min(y0, s.y[i]);
                y1 = std::max(y1, s.y[i]);
            }
        }
    }
    if (!std::isfinite(x0)) {
        x0 = y0 = 0;
        x1 = y1 = 1;
    }
    if (x1 == x0) {
        x1 = x0 + 1;
    }
    if (y1 == y0) {
        y1 = y0 + 1;
    }
    auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return top + (1 - (y - y0) / (y1 - y0)) * ph; };
    static const char *colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << left + pw / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(spec.title)
      << "</text>\n";
    o << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    double xs = tick_step(x1 - x0), ys = tick_step(y1 - y0);
    for (double v = std::ceil(x0 / xs) * xs; v <= x1 + 1e-9 * xs; v += xs) {
        o << "<line x1=\"" << px(v) << "\" y1=\"" << top + ph << "\" x2=\"" << px(v) << "\" y2=\"" << top + ph + 5
          << "\" stroke=\"black\"/><text x=\"" << px(v) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">"
          << format_real(std::abs(v) < 1e-12 * xs ? 0 : v) << "</text>\n";
    }
    for (double v = std::ceil(y0 / ys) * ys; v <= y1 + 1e-9 * ys; v += ys) {
        o << "<line x1=\"" << left - 5 << "\" y1=\"" << py(v) << "\" x2=\"" << left << "\" y2=\"" << py(v)
          << "\" stroke=\"black\"/><text x=\"" << left - 8 << "\" y=\"" << py(v) + 4 << "\" text-anchor=\"end\">"
          << format_real(std::abs(v) < 1e-12 * ys ? 0 : v) << "</text>\n";
    }
    o << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 15 << "\" text-anchor=\"middle\">"
      << xml_escape(spec.x_label) << "</text>\n";
    o << "<text transform=\"translate(18," << top + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
      << xml_escape(spec.y_label) << "</text>\n";
    for (size_t k = 0; k < spec.series.size(); k++) {
        const auto &s = spec.series[k];
        const char *color = colors[k % std::size(colors)];
        o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (size_t i = 0; i < s.x.size() && i < s.y.size(); i++) {
            if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
                o << (first ? "" : " ") << px(s.x[i]) << "," << py(s.y[i]);
                first = false;
            }
        }
        o << "\"/>\n";
        double ly = top + 15 + 18 * double(k);
        o << "<line x1=\"" << left + pw + 12 << "\" y1=\"" << ly << "\" x2=\"" << left + pw + 32 << "\" y2=\"" << ly
          << "\" stroke=\"" << color << "\" stroke-width=\"2\"/><text x=\"" << left + pw + 38 << "\" y=\"" << ly + 4
          << "\">" << xml_escape(s.label) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

PlotSpec plot_from_table(const Table &t, const std::string &x, const std::string &y, const std::string &group) {
    PlotSpec spec;
    spec.x_label = x;
    spec.y_label = y;
    spec.title = y + " vs " + x;
    size_t gcol = t.column(group);
    std::map<std::string, size_t> index;
    for (size_t r = 0; r < t.size(); r++) {
        std::string key = cell_text(t.rows[r][gcol]);
        auto [it, inserted] = index.emplace(key, spec.series.size());
        if (inserted) {
            spec.series.push_back({group + "=" + key, {}, {}});
        }
        spec.series[it->second].x.push_back(t.number(r, x));
        spec.series[it->second].y.push_back(t.number(r, y));
    }
    return spec;
}

}  // namespace qfluct
