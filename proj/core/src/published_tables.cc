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

#include "aqsc/published_tables.hpp"

#include <string>

#include "aqsc/error.hpp"

namespace aqsc {

const std::vector<PublishedTable>& published_tables() {
    // clang-format off
    static const std::vector<PublishedTable> tables = {
        {1,
         5,
         3.5796,
         {
          {{3, 7}, 42, 18, 1.0905, 0.5663, 63, 5, 7, 4, false, false},
          {{3, 8}, 24, 9, 1.5286, 0.7270, 36, 5, 5, 3, false, false},
          {{3, 9}, 18, 6, 1.8551, 0.8192, 27, 5, 5, 2, false, false},
          {{3, 12}, 12, 3, 2.5534, 0.9516, 18, 5, 4, 2, false, false},
          {{3, 15}, 10, 2, 3.0486, 1.0070, 15, 5, 4, 2, false, false},
          {{4, 5}, 15, 12, 1.2537, 1.0613, 30, 5, 4, 3, false, false},
          {{4, 7}, 7, 4, 2.1408, 1.4491, 14, 5, 3, 2, false, false},
          {{4, 8}, 6, 3, 2.4485, 1.5286, 12, 5, 3, 2, false, false},
          {{4, 10}, 5, 2, 2.9387, 1.6169, 10, 5, 3, 2, false, false},
         }},
        {2,
         7,
         4.3144,
         {
          {{3, 7}, 70, 30, 1.0905, 0.5663, 105, 7, 8, 4, false, false},
          {{3, 8}, 40, 15, 1.5286, 0.7270, 60, 7, 6, 3, false, false},
          {{3, 9}, 30, 10, 1.8551, 0.8192, 45, 7, 6, 3, false, false},
          {{3, 11}, 22, 6, 2.3517, 0.9210, 33, 7, 5, 2, false, false},
          {{3, 12}, 20, 5, 2.5534, 0.9516, 30, 7, 5, 2, false, false},
          {{3, 16}, 16, 3, 3.1877, 1.0186, 24, 7, 5, 2, false, false},
          {{3, 21}, 14, 2, 3.7611, 1.0529, 21, 7, 4, 2, false, false},
          {{4, 5}, 25, 20, 1.2537, 1.0613, 50, 7, 5, 4, false, false},
          {{4, 6}, 15, 10, 1.7627, 1.3170, 30, 7, 4, 3, true, false},
          {{4, 8}, 10, 5, 2.4485, 1.5286, 20, 7, 3, 2, true, false},
          {{4, 9}, 9, 4, 2.7101, 1.5807, 18, 7, 3, 2, true, false},
          {{4, 14}, 7, 2, 3.6472, 1.6900, 14, 7, 3, 2, true, false},
         }},
        {3,
         9,
         4.8414,
         {
          {{3, 7}, 98, 42, 1.0905, 0.5663, 147, 9, 9, 5, true, false},
          {{3, 8}, 56, 21, 1.5286, 0.7270, 84, 9, 7, 4, true, false},
          {{3, 9}, 42, 14, 1.8551, 0.8192, 63, 9, 6, 3, true, false},
          {{3, 12}, 28, 7, 2.5534, 0.9516, 42, 9, 6, 2, true, false},
          {{3, 13}, 26, 6, 2.7341, 0.9748, 39, 9, 5, 2, true, false},
          {{3, 20}, 20, 3, 3.6594, 1.0481, 30, 9, 5, 2, true, false},
          {{3, 27}, 18, 2, 4.2792, 1.0712, 27, 9, 5, 2, true, true},
          {{4, 5}, 35, 28, 1.2537, 1.0613, 70, 9, 5, 4, true, false},
          {{4, 6}, 21, 14, 1.7627, 1.3170, 42, 9, 4, 3, true, false},
          {{4, 8}, 14, 7, 2.4485, 1.5286, 28, 9, 4, 2, true, false},
          {{4, 11}, 11, 4, 3.1422, 1.6432, 22, 9, 3, 2, true, false},
          {{4, 18}, 9, 2, 4.1637, 1.7191, 18, 9, 3, 2, true, false},
          {{5, 8}, 8, 5, 2.7609, 2.0481, 20, 9, 3, 2, true, false},
          {{5, 15}, 6, 2, 4.0698, 2.1934, 15, 9, 3, 2, true, false},
         }},
        {4,
         11,
         5.2548,
         {
          {{3, 7}, 126, 54, 1.0905, 0.5663, 189, 11, 10, 5, false, false},
          {{3, 8}, 72, 27, 1.5286, 0.7270, 108, 11, 8, 4, false, false},
          {{3, 9}, 54, 18, 1.8551, 0.8192, 81, 11, 7, 3, false, false},
          {{3, 12}, 36, 9, 2.5534, 0.9516, 54, 11, 6, 3, false, false},
          {{3, 15}, 30, 6, 3.0486, 1.0070, 45, 11, 6, 2, false, false},
          {{3, 24}, 24, 3, 4.0374, 1.0638, 36, 11, 5, 2, false, false},
          {{3, 33}, 22, 2, 4.6883, 1.0803, 33, 11, 5, 2, false, false},
          {{4, 6}, 27, 18, 1.7627, 1.3170, 54, 11, 4, 3, false, false},
          {{4, 7}, 21, 12, 2.1408, 1.4491, 42, 11, 4, 3, false, false},
          {{4, 8}, 18, 9, 2.4485, 1.5286, 36, 11, 4, 3, false, false},
          {{4, 10}, 15, 6, 2.9387, 1.6169, 30, 11, 4, 2, false, false},
          {{4, 13}, 13, 4, 3.4932, 1.6780, 26, 11, 4, 2, false, false},
          {{4, 16}, 12, 3, 3.9225, 1.7073, 24, 11, 4, 2, false, false},
          {{4, 22}, 11, 2, 4.5720, 1.7337, 22, 11, 4, 2, false, false},
          {{6, 12}, 6, 3, 3.7556, 2.5534, 18, 11, 3, 2, false, false},
         }},
    };
    // clang-format on
    return tables;
}

const PublishedTable& published_table(int number) {
    if (number < 1 || number > 4) {
        throw Error(ErrorCode::InvalidArgument, "no parameter table " + std::to_string(number));
    }
    return published_tables()[static_cast<std::size_t>(number - 1)];
}

}  // namespace aqsc
