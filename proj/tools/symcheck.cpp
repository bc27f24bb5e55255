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
#include "symcheck/contraction.hpp"
#include "symcheck/realizations.hpp"
#include "symcheck/report.hpp"
#include "symcheck/tables.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace symcheck;

GeneratorFamily family_by_name(const std::string& name) {
    if (name == "sp2-diffop") return build_sp2_diffop();
    if (name == "so21-matrix") return build_so21_minkowski();
    if (name == "sp4") return build_sp4_phase_space();
    if (name == "so32-5d") return build_so32_5d();
    if (name == "poincare")
        return {"poincare", FamilyKind::so32_5d, build_poincare_basis()};
    throw CLI::ValidationError(
        "family", "unknown family '" + name +
                      "' (expected sp2-diffop, so21-matrix, sp4, so32-5d, or poincare)");
}

// A family name for `map` resolves to its extracted structure constants;
// a bundled table name resolves to the table itself.
StructureConstants constants_by_name(const std::string& name) {
    for (const char* table : {"sp2_so21", "yurke_triple", "su2", "so32"})
        if (name == table) return tables::bundled(name);
    return extract_structure_constants(family_by_name(name).basis);
}

int cmd_run(const std::string& suite, const SuiteOptions& options, const std::string& json_path) {
    SuiteReport report = run_suite(suite, options);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return 2;
        }
        out << report.to_json().dump(2) << "\n";
    }
    std::cout << report.to_text();
    return report.overall_pass() ? 0 : 1;
}

int cmd_export(const std::string& family, const std::string& json_path) {
    export_family_json(family_by_name(family), json_path);
    std::cout << "wrote " << json_path << "\n";
    return 0;
}

int cmd_map(const std::string& src, const std::string& dst) {
    StructureConstants a = constants_by_name(src);
    StructureConstants b = constants_by_name(dst);
    auto map = find_basis_map(a, b);
    if (!map) {
        std::cout << "none\n";
        return 1;
    }
    std::cout << map->to_string(a.labels(), b.labels()) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symcheck: exact verification of a family of operator algebras"};
    app.require_subcommand(1);

    std::string suite, family, src, dst, json_path, tables_dir;
    SuiteOptions options;

    auto* run = app.add_subcommand("run", "run a named verification suite");
    run->add_option("suite", suite, "suite name (see --help-suites)")->required();
    run->add_option("--cutoff", options.cutoff, "per-mode quanta cutoff for Fock suites")
        ->check(CLI::Range(4, 64));
    run->add_option("--tol", options.tol, "tolerance for float suites");
    run->add_option("--tables", tables_dir, "directory overriding the bundled tables");
    run->add_option("--json", json_path, "write the JSON report to this path");

    auto* exp = app.add_subcommand("export", "export a generator family as matrix JSON");
    exp->add_option("family", family, "sp2-diffop | so21-matrix | sp4 | so32-5d | poincare")
        ->required();
    exp->add_option("--json", json_path, "output path")->required();

    auto* map = app.add_subcommand("map", "search for a signed-permutation isomorphism");
    map->add_option("src", src, "source family or table name")->required();
    map->add_option("dst", dst, "destination family or table name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors are exit code 2
    }

    try {
        if (!tables_dir.empty()) symcheck::tables::set_dir(tables_dir);
        if (run->parsed()) return cmd_run(suite, options, json_path);
        if (exp->parsed()) return cmd_export(family, json_path);
        if (map->parsed()) return cmd_map(src, dst);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
