/*
 * Copyright 2026 The symcheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include "symcheck/lie.hpp"

#include <string>
#include <vector>

namespace symcheck::tables {

/// Reads a structure-constant table: a JSON array of records
/// {i, j, k, re, im} with string-rational scalars; pairs absent from the
/// file have zero commutator.  `labels` fixes the generator order.
StructureConstants load(const std::string& path, const std::vector<std::string>& labels);

void save(const StructureConstants& sc, const std::string& path);

/// Directory holding the bundled ground-truth tables; the compiled-in
/// default can be overridden (CLI --tables).
std::string default_dir();
void set_dir(const std::string& dir);

/// Bundled tables by name: "sp2_so21", "yurke_triple", "su2", "so32".
StructureConstants bundled(const std::string& name);
std::vector<std::string> bundled_labels(const std::string& name);

} // namespace symcheck::tables
