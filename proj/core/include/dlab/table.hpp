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

#ifndef DLAB_TABLE_HPP
#define DLAB_TABLE_HPP

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace dlab {

using Cell = std::variant<double, std::string>;

/// A rectangular result table: one header row plus value rows.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Index of a column by name; throws std::out_of_range if absent.
    std::size_t column(const std::string &name) const;
    double number(std::size_t row, const std::string &name) const;
};

/// UTF-8, header row, '.' decimal separator, %.17g numbers, '\n' line ends.
void write_csv(const Table &t, std::ostream &out);

/// Array of JSON objects, one per row, keys in column order.
std::string to_json_records(const Table &t, int indent = 2);

}  // namespace dlab

#endif
