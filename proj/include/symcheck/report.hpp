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

#include <json.hpp>

#include <string>
#include <vector>

namespace symcheck {

enum class CheckStatus { pass, fail, error };

struct CheckRecord {
    std::string id;
    std::string description;
    CheckStatus status = CheckStatus::error;
    std::string residual;  // exact-scalar string or float, empty if none
    nlohmann::json data;   // suite-specific payload (maps, limits, ...)
};

struct SuiteReport {
    std::string suite;
    std::string timestamp;
    std::vector<CheckRecord> checks;

    bool overall_pass() const;
    nlohmann::json to_json() const;
    /// One line per check plus a trailing overall line.
    std::string to_text() const;
};

struct SuiteOptions {
    int cutoff   = 6;     // Fock suites
    double tol   = 1e-12; // float suites only; exact suites ignore it
};

/// Names accepted by run_suite, in canonical order ("all" last).
const std::vector<std::string>& suite_names();

/// Runs one named verification suite.  Throws std::invalid_argument for
/// an unknown name; internal errors surface as ERROR records.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

} // namespace symcheck
