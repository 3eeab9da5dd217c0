// Copyright 2026 The smellscan Authors.
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

// A published detection record and a script that reproduces it.

#ifndef SMELLSCAN_TESTS_SUPPORT_RECORDS_HPP_
#define SMELLSCAN_TESTS_SUPPORT_RECORDS_HPP_

#include <string>

namespace smellscan::testing {

// Detection record as printed for a CircuitNet training script. The code
// strings are cut short in the printed record and are kept as printed.
inline constexpr const char* kPrintedRecord = R"({
    "file_path": "../ai_projects/CircuitNet/routability_ir_drop_prediction/train.py",
    "cl": "",
    "me": "train",
    "idiom": "Truth Value Test",
    "compli_code": [
        "iter_num "
    ],
    "simple_code": [
        "not iter_num "
    ],
    "lineno": [
        [
            [
                161,
                11
            ],
            [
                161,
                36
            ]
        ]
    ],
    "keyno": null})";

// A train() body whose line 161 holds the printed comparison.
inline std::string train_script() {
  std::string text = "def train():\n    for iter_num in range(10):\n";
  for (int line = 3; line <= 160; ++line) text += "        pass\n";
  text += "        if iter_num % save_freq == 0:\n            save()\n";
  return text;
}

}  // namespace smellscan::testing

#endif  // SMELLSCAN_TESTS_SUPPORT_RECORDS_HPP_
