// Copyright 2026 The AQSC Authors
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

// Reference values for the non-orientable code tables (genus 5, 7, 9, 11),
// transcribed verbatim. Each row covers a dual pair {p,q}/{q,p} that shares
// one printed record [[n, k, d_z/d_x]].

#ifndef AQSC_PUBLISHED_TABLES_HPP
#define AQSC_PUBLISHED_TABLES_HPP

#include <cstdint>
#include <vector>

#include "aqsc/hyperbolic.hpp"

namespace aqsc {

struct PublishedPair {
    SchlafliSymbol first;  // listed first; always p < q
    std::int64_t n_f_first;
    std::int64_t n_f_second;
    double l_first;   // l(p,q), 4 decimals
    double l_second;  // l(q,p), 4 decimals
    std::int64_t n;
    std::int64_t k;
    std::int64_t d_z;
    std::int64_t d_x;
    bool record_on_second_line;  // layout only: which line carries the record
    bool single_bracket;         // record printed as [n, k, d_z/d_x]
};

struct PublishedTable {
    int number;
    int genus;   // non-orientable
    double d_h;  // caption value, 4 decimals
    std::vector<PublishedPair> rows;
};

/// Tables 1-4, in order.
const std::vector<PublishedTable>& published_tables();

/// Throws InvalidArgument unless 1 <= number <= 4.
const PublishedTable& published_table(int number);

}  // namespace aqsc

#endif  // AQSC_PUBLISHED_TABLES_HPP
