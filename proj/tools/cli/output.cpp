// Copyright 2026 The Photonamp Authors
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

#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace photonamp::cli {

namespace {

std::string field(const std::optional<double>& value) {
    return value ? format_real(*value) : std::string();
}

std::string field_dat(const std::optional<double>& value) {
    return value ? format_real(*value) : std::string("nan");
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write to '" + path + "'");
    }
    return out;
}

std::optional<double> parse_field(const std::string& text, const std::string& path,
                                  std::size_t line) {
    if (text.empty()) {
        return std::nullopt;
    }
    double value = 0.0;
    std::size_t consumed = 0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        consumed = 0;
    }
    if (consumed != text.size()) {
        throw Error(path + ":" + std::to_string(line) + ": malformed number '" +
                    text + "'");
    }
    if (!std::isfinite(value) || value < 0.0) {
        throw Error(path + ":" + std::to_string(line) +
                    ": values must be finite and non-negative");
    }
    return value;
}

}  // namespace

std::string format_real(double value) {
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "%#.9g", value);
    return buffer;
}

void write_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    if (rows.empty()) {
        throw Error("refusing to write an empty output file");
    }
    std::ofstream out = open_for_write(path);
    out << kCsvHeader << '\n';
    for (const SweepRow& row : rows) {
        out << format_real(row.input_loss) << ',' << format_real(row.transmission)
            << ',' << field(row.gain) << ',' << field(row.herald_probability) << ','
            << field(row.herald_efficiency) << ',' << field(row.visibility) << ','
            << field(row.distance_km) << '\n';
    }
}

void write_dat(const std::vector<SweepRow>& rows, const std::string& path) {
    if (rows.empty()) {
        throw Error("refusing to write an empty output file");
    }
    std::ofstream out = open_for_write(path);
    out << "# p t gain herald_probability herald_efficiency visibility distance_km\n";
    for (const SweepRow& row : rows) {
        out << format_real(row.input_loss) << ' ' << format_real(row.transmission)
            << ' ' << field_dat(row.gain) << ' ' << field_dat(row.herald_probability)
            << ' ' << field_dat(row.herald_efficiency) << ' '
            << field_dat(row.visibility) << ' ' << field_dat(row.distance_km) << '\n';
    }
}

std::vector<SweepRow> read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw Error(path + ": missing or unexpected CSV header");
    }
    std::vector<SweepRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (std::count(line.begin(), line.end(), ',') != 6) {
            throw Error(path + ":" + std::to_string(line_no) + ": expected 7 fields");
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) {
            fields.push_back(item);
        }
        // A trailing empty field is swallowed by getline.
        while (fields.size() < 7) fields.emplace_back();
        SweepRow row;
        auto p = parse_field(fields[0], path, line_no);
        auto t = parse_field(fields[1], path, line_no);
        if (!p || !t) {
            throw Error(path + ":" + std::to_string(line_no) + ": p and t are required");
        }
        row.input_loss = *p;
        row.transmission = *t;
        row.gain = parse_field(fields[2], path, line_no);
        row.herald_probability = parse_field(fields[3], path, line_no);
        row.herald_efficiency = parse_field(fields[4], path, line_no);
        row.visibility = parse_field(fields[5], path, line_no);
        row.distance_km = parse_field(fields[6], path, line_no);
        rows.push_back(row);
    }
    return rows;
}

void write_fringe_csv(const std::vector<FringePoint>& points, double visibility,
                      const std::string& path, bool dat_format) {
    if (points.empty()) {
        throw Error("refusing to write an empty output file");
    }
    std::ofstream out = open_for_write(path);
    if (dat_format) {
        out << "# phi probability (visibility " << format_real(visibility) << ")\n";
        for (const FringePoint& point : points) {
            out << format_real(point.phase) << ' ' << format_real(point.probability)
                << '\n';
        }
    } else {
        out << "phi,probability\n";
        for (const FringePoint& point : points) {
            out << format_real(point.phase) << ',' << format_real(point.probability)
                << '\n';
        }
    }
}

}  // namespace photonamp::cli
