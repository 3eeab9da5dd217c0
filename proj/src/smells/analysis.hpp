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

// Helpers shared by the detectors. Not part of the public interface.

#ifndef SMELLSCAN_SRC_SMELLS_ANALYSIS_HPP_
#define SMELLSCAN_SRC_SMELLS_ANALYSIS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smellscan/smells.hpp"

namespace smellscan::detail {

// Nearest enclosing Module, FunctionDef, ClassDef or Lambda.
const Node& scope_of(const Node& node);

bool is_within(const Node& node, const Node& ancestor);

bool any_of(const Node& root, const std::function<bool(const Node&)>& pred);

bool mentions_name(const Node& root, std::string_view name);

bool contains_kind(const Node& root, std::initializer_list<NodeKind> kinds);

// Visits every statement list (module body and every Block).
void for_each_statement_list(const Node& root,
                             const std::function<void(const std::vector<NodePtr>&)>& visit);

// Names bound by an assignment target (Name, Tuple, List, Starred).
// Returns nullopt when the target contains anything else.
std::optional<std::vector<std::string>> target_names(const Node& target);

// True when `name` is declared global/nonlocal anywhere under `scope`, or
// the scope calls locals(), vars(), globals(), eval() or exec().
bool has_dynamic_binding(const Node& scope, std::string_view name);

// True when `name` is loaded or deleted under `scope` outside `region`.
// Loads that are clearly rebound first are ignored: those in the body of
// another for loop that binds the name, and those inside a comprehension
// that binds it.
bool used_outside(const Node& scope, std::string_view name, const Node& region);

// True when `name` is bound anywhere under `root` by an assignment, a
// parameter, a definition, an import or an exception handler.
bool binds_name(const Node& root, std::string_view name);

// Local of a function that no nested scope can observe.
bool is_private_local(const Node& scope, std::string_view name);

// Non-negative decimal integer literal value.
std::optional<long long> int_literal(const Node& node);

Detection make_detection(const SourceUnit& unit, SmellKind kind, const SourceRange& range,
                         const std::string& simple);

// Text of `outer` with each edit range replaced. Edits must be disjoint and
// lie inside `outer`.
std::string splice(const SourceUnit& unit, const SourceRange& outer,
                   std::vector<std::pair<SourceRange, std::string>> edits);

// Sorts by position and drops detections overlapping an earlier one.
void finalize(std::vector<Detection>& detections);

}  // namespace smellscan::detail

#endif  // SMELLSCAN_SRC_SMELLS_ANALYSIS_HPP_
