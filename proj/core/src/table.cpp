// Copyright 2026 The duality_lab Authors
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

#include "dlab/table.hpp"

#include <stdexcept>

#include "dlab/report_io.hpp"
#include "json.hpp"

namespace dlab {

std::size_t Table::column(const std::string &name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return i;
    }
    throw std::out_of_range("no column named " + name);
}

double Table::number(std::size_t row, const std::string &name) const {
    return std::get<double>(rows.at(row).at(column(name)));
}

void write_csv(const Table &t, std::ostream &out) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out << ',';
        out << t.columns[i];
    }
    out << '\n';
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            if (const auto *d = std::get_if<double>(&row[i])) {
                out << format_double(*d);
            } else {
                out << std::get<std::string>(row[i]);
            }
        }
        out << '\n';
    }
}

std::string to_json_records(const Table &t, int indent) {
    auto records = nlohmann::ordered_json::array();
    for (const auto &row : t.rows) {
        nlohmann::ordered_json rec;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit([&](const auto &v) { rec[t.columns[i]] = v; }, row[i]);
        }
        records.push_back(std::move(rec));
    }
    return records.dump(indent);
}

}  // namespace dlab
