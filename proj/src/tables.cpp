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
#include "symcheck/tables.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

#ifndef SYMCHECK_DATA_DIR
#define SYMCHECK_DATA_DIR "data/tables"
#endif

namespace symcheck::tables {

namespace {
std::string g_dir = SYMCHECK_DATA_DIR;
}

std::string default_dir() { return g_dir; }
void set_dir(const std::string& dir) { g_dir = dir; }

StructureConstants load(const std::string& path, const std::vector<std::string>& labels) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    nlohmann::json j;
    in >> j;
    if (!j.is_array()) throw std::runtime_error("table file is not a JSON array: " + path);

    StructureConstants sc(labels);
    for (auto& rec : j) {
        int i = sc.index_of(rec.at("i").get<std::string>());
        int k = sc.index_of(rec.at("k").get<std::string>());
        int l = sc.index_of(rec.at("j").get<std::string>());
        CScalar c(Surd(parse_rational(rec.at("re").get<std::string>())),
                  Surd(parse_rational(rec.at("im").get<std::string>())));
        sc.set(i, l, k, c);
    }
    return sc;
}

void save(const StructureConstants& sc, const std::string& path) {
    nlohmann::json j = nlohmann::json::array();
    for (auto& [i, l, k, c] : sc.entries()) {
        if (!c.real().is_rational() || !c.imag().is_rational())
            throw std::runtime_error("table format only supports rational coefficients");
        j.push_back({{"i", sc.labels()[i]},
                     {"j", sc.labels()[l]},
                     {"k", sc.labels()[k]},
                     {"re", to_string(c.real().rational_value())},
                     {"im", to_string(c.imag().rational_value())}});
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write table file: " + path);
    out << j.dump(2) << "\n";
}

std::vector<std::string> bundled_labels(const std::string& name) {
    if (name == "sp2_so21") return {"J2", "K1", "K3"};
    if (name == "yurke_triple") return {"K3", "Q3", "S3"};
    if (name == "su2") return {"L1", "L2", "L3"};
    if (name == "so32")
        return {"L1", "L2", "L3", "S3", "K1", "K2", "K3", "Q1", "Q2", "Q3"};
    throw std::invalid_argument("unknown bundled table: " + name);
}

StructureConstants bundled(const std::string& name) {
    return load(g_dir + "/" + name + ".json", bundled_labels(name));
}

} // namespace symcheck::tables
