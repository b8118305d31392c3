// Copyright 2026 The fqsim Authors
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

#include "fqs/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fqs {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ArgumentError("not a number: '" + std::string(s) + "'");
    }
    return v;
}

namespace {

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ArgumentError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::ofstream open_out(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ArgumentError("cannot write " + path.string());
    }
    return out;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    for (;;) {
        size_t p = line.find(sep);
        out.push_back(line.substr(0, p));
        if (p == std::string_view::npos) {
            return out;
        }
        line.remove_prefix(p + 1);
    }
}

}  // namespace

Hamiltonian parse_hamiltonian_file(const std::filesystem::path &path) {
    return parse_hamiltonian_text(read_file(path));
}

void write_hamiltonian_file(const std::filesystem::path &path, const Hamiltonian &h) {
    open_out(path) << format_hamiltonian_text(h);
}

void write_trajectory_csv(std::ostream &os, const std::vector<TrajectoryRow> &rows) {
    os << kTrajectoryHeader << '\n';
    for (const auto &r : rows) {
        os << r.step << ',' << format_double(r.tau) << ',' << format_double(r.energy) << ','
           << (r.fidelity_exact ? format_double(*r.fidelity_exact) : "") << ','
           << (r.fidelity_ground ? format_double(*r.fidelity_ground) : "") << '\n';
    }
}

void write_trajectory_csv(const std::filesystem::path &path, const std::vector<TrajectoryRow> &rows) {
    auto out = open_out(path);
    write_trajectory_csv(out, rows);
}

std::vector<TrajectoryRow> read_trajectory_csv(const std::filesystem::path &path) {
    const std::string text = read_file(path);
    std::vector<TrajectoryRow> rows;
    size_t line_no = 0;
    for (std::string_view line : split(text, '\n')) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line_no == 1) {
            if (line != kTrajectoryHeader) {
                throw ParseError(path.string() + ": unexpected header", 1);
            }
            continue;
        }
        if (line.empty()) {
            continue;
        }
        auto f = split(line, ',');
        if (f.size() != 5) {
            throw ParseError(path.string() + ": expected 5 fields", line_no);
        }
        try {
            TrajectoryRow r;
            r.step = static_cast<size_t>(parse_double(f[0]));
            r.tau = parse_double(f[1]);
            r.energy = parse_double(f[2]);
            if (!f[3].empty()) {
                r.fidelity_exact = parse_double(f[3]);
            }
            if (!f[4].empty()) {
                r.fidelity_ground = parse_double(f[4]);
            }
            rows.push_back(std::move(r));
        } catch (const ArgumentError &e) {
            throw ParseError(path.string() + ": " + e.what(), line_no);
        }
    }
    if (line_no == 0 || text.empty()) {
        throw ParseError(path.string() + ": empty file", 0);
    }
    return rows;
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) {
        throw ArgumentError("quantile of an empty sample");
    }
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const size_t lo = static_cast<size_t>(std::floor(pos));
    const size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

std::string compare_report(const std::vector<std::vector<TrajectoryRow>> &runs) {
    if (runs.empty()) {
        throw ArgumentError("compare: need at least one run");
    }
    const auto &grid = runs.front();
    for (size_t r = 1; r < runs.size(); ++r) {
        if (runs[r].size() != grid.size()) {
            throw AlignmentError("compare: run " + std::to_string(r) + " has " + std::to_string(runs[r].size()) +
                                 " checkpoints, expected " + std::to_string(grid.size()));
        }
        for (size_t i = 0; i < grid.size(); ++i) {
            if (runs[r][i].step != grid[i].step || runs[r][i].tau != grid[i].tau) {
                throw AlignmentError("compare: run " + std::to_string(r) + " checkpoint " + std::to_string(i) +
                                     " is at step " + std::to_string(runs[r][i].step) + ", expected " +
                                     std::to_string(grid[i].step));
            }
        }
    }

    static constexpr const char *kStats[] = {"min", "q25", "median", "q75", "max"};
    static constexpr double kLevels[] = {0, 0.25, 0.5, 0.75, 1};
    std::ostringstream os;
    os << "step,tau";
    for (const char *col : {"energy", "fidelity_exact", "fidelity_ground"}) {
        for (const char *s : kStats) {
            os << ',' << col << '_' << s;
        }
    }
    os << '\n';

    for (size_t i = 0; i < grid.size(); ++i) {
        os << grid[i].step << ',' << format_double(grid[i].tau);
        auto emit = [&](auto get) {
            std::vector<double> v;
            for (const auto &run : runs) {
                if (auto x = get(run[i])) {
                    v.push_back(*x);
                }
            }
            for (double q : kLevels) {
                os << ',';
                if (v.size() == runs.size()) {
                    os << format_double(quantile(v, q));
                }
            }
        };
        emit([](const TrajectoryRow &r) { return std::optional<double>(r.energy); });
        emit([](const TrajectoryRow &r) { return r.fidelity_exact; });
        emit([](const TrajectoryRow &r) { return r.fidelity_ground; });
        os << '\n';
    }
    return os.str();
}

std::string compare_report(const std::vector<std::filesystem::path> &csv_paths) {
    std::vector<std::vector<TrajectoryRow>> runs;
    for (const auto &p : csv_paths) {
        runs.push_back(read_trajectory_csv(p));
    }
    return compare_report(runs);
}

}  // namespace fqs
