// Copyright 2026 The Spincast Authors
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

#include "spincast/model_io.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace spincast {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

template <typename T>
T require(const json& j, const char* key, const char* what) {
    if (!j.contains(key)) {
        throw InputError(std::string(what) + " is missing required key \"" + key + "\"");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string(what) + " key \"" + key + "\" has the wrong type: " +
                         e.what());
    }
}

static_assert(std::endian::native == std::endian::little,
              "state dumps are written little-endian without byte swapping");

}  // namespace

SpinModel model_from_json_string(const std::string& text) {
    const json j = parse(text, "model");
    const int n_spins = require<int>(j, "n_spins", "model");
    const double offset = require<double>(j, "offset", "model");
    std::vector<ParityTerm> terms;
    int widest = 1;
    for (const json& t : require<json>(j, "terms", "model")) {
        ParityTerm term;
        term.sites = require<std::vector<int>>(t, "sites", "model term");
        term.coupling = require<double>(t, "J", "model term");
        widest = std::max(widest, static_cast<int>(term.sites.size()));
        terms.push_back(std::move(term));
    }
    return SpinModel(n_spins, std::move(terms), offset, std::max(widest, kDefaultMaxArity));
}

std::string model_to_json_string(const SpinModel& model) {
    json j;
    j["n_spins"] = model.n_spins();
    j["offset"] = model.offset();
    j["terms"] = json::array();
    for (const ParityTerm& term : model.terms()) {
        j["terms"].push_back({{"J", term.coupling}, {"sites", term.sites}});
    }
    return canonical(j);
}

GeneralModel general_from_json_string(const std::string& text) {
    const json j = parse(text, "general model");
    GeneralModel model;
    model.q = require<int>(j, "q", "general model");
    int max_site = -1;
    for (const json& t : require<json>(j, "interactions", "general model")) {
        GeneralInteraction interaction;
        interaction.sites = require<std::vector<int>>(t, "sites", "general interaction");
        interaction.table = require<std::vector<double>>(t, "table", "general interaction");
        for (int site : interaction.sites) {
            max_site = std::max(max_site, site);
        }
        model.interactions.push_back(std::move(interaction));
    }
    if (max_site < 0) {
        throw InputError("general model has no interactions; the site count is undefined");
    }
    model.n_sites = max_site + 1;
    return model;
}

std::string general_to_json_string(const GeneralModel& model) {
    json j;
    j["q"] = model.q;
    j["interactions"] = json::array();
    for (const GeneralInteraction& interaction : model.interactions) {
        j["interactions"].push_back({{"sites", interaction.sites}, {"table", interaction.table}});
    }
    return canonical(j);
}

ClusterLayout layout_from_json_string(const std::string& text) {
    const json j = parse(text, "layout");
    const int rows = require<int>(j, "rows", "layout");
    const int cols = require<int>(j, "cols", "layout");
    const std::string roles = require<std::string>(j, "roles", "layout");
    if (static_cast<int>(roles.size()) != rows * cols) {
        throw InputError("layout roles string length does not match rows * cols");
    }

    // The target map carries enough structure to rebuild the spin model the
    // layout was compiled from (offsets are irrelevant downstream).
    struct InteractionEntry {
        int clique_index;
        std::vector<int> sites;
        double coupling;
        int lattice_qubit;
    };
    std::vector<InteractionEntry> interactions;
    std::vector<ParityTerm> terms;
    std::map<int, int> vertex_map;  // spin -> lattice qubit
    int n_spins = 0;

    const json& tm = require<json>(j, "target_map", "layout");
    for (const auto& [key, value] : tm.items()) {
        const int lattice_q = std::stoi(key);
        const std::string kind = require<std::string>(value, "kind", "target map entry");
        if (kind == "interaction") {
            InteractionEntry e;
            e.clique_index = require<int>(value, "clique_index", "target map entry");
            e.sites = require<std::vector<int>>(value, "sites", "target map entry");
            e.coupling = require<double>(value, "J", "target map entry");
            e.lattice_qubit = lattice_q;
            for (int s : e.sites) n_spins = std::max(n_spins, s + 1);
            interactions.push_back(std::move(e));
        } else if (kind == "vertex") {
            const int spin = require<int>(value, "spin", "target map entry");
            const double coupling = require<double>(value, "J", "target map entry");
            vertex_map[spin] = lattice_q;
            n_spins = std::max(n_spins, spin + 1);
            if (coupling != 0.0) {
                terms.push_back(ParityTerm{{spin}, coupling});
            }
        } else {
            throw InputError("target map entry kind must be \"interaction\" or \"vertex\"");
        }
    }
    for (const auto& e : interactions) {
        terms.push_back(ParityTerm{e.sites, e.coupling});
    }
    int widest = 1;
    for (const auto& t : terms) widest = std::max(widest, static_cast<int>(t.sites.size()));
    CliqueSystem system(
        SpinModel(n_spins, terms, 0.0, std::max(widest, kDefaultMaxArity)));

    ClusterLayout layout{LatticeGraph(rows, cols), std::vector<Role>(), {}, {}, system,
                         j.value("epsilon", 0.05)};
    for (char r : roles) {
        if (r != 'A' && r != 'B' && r != 'C') {
            throw InputError("layout roles must be drawn from {A, B, C}");
        }
        layout.roles.push_back(static_cast<Role>(r));
    }

    for (const auto& e : interactions) {
        // Rebuilt term order must agree with the stored clique indices.
        std::vector<int> sorted_sites = e.sites;
        std::sort(sorted_sites.begin(), sorted_sites.end());
        if (system.interaction_sites(e.clique_index) != sorted_sites) {
            throw InputError("target map clique_index does not match the rebuilt term order");
        }
        layout.target_map[e.lattice_qubit] = e.clique_index;
    }
    for (const auto& [spin, lattice_q] : vertex_map) {
        layout.target_map[lattice_q] = system.vertex_qubit(spin);
    }

    for (const json& w : require<json>(j, "omega", "layout")) {
        const int q = require<int>(w, "qubit", "omega entry");
        const auto amps = require<std::vector<std::vector<double>>>(w, "amplitudes", "omega entry");
        if (amps.size() != 2 || amps[0].size() != 2 || amps[1].size() != 2) {
            throw InputError("omega amplitudes must be two [re, im] pairs");
        }
        OmegaState state;
        state.a0 = Complex(amps[0][0], amps[0][1]);
        state.a1 = Complex(amps[1][0], amps[1][1]);
        const double norm = std::norm(state.a0) + std::norm(state.a1);
        if (std::abs(norm - 1.0) > 1e-12) {
            throw InputError("omega state is not normalized");
        }
        if (std::abs(state.a1) < 1e-12) {
            state.label = "Z+";
        } else if (std::abs(state.a0 - state.a1) < 1e-12) {
            state.label = "X+";
        } else {
            state.label = "custom";
        }
        layout.omega[q] = state;
    }

    // Structural checks: roles, omega, and target map must partition the
    // lattice consistently.
    for (int q = 0; q < layout.lattice.n_sites(); ++q) {
        const bool has_omega = layout.omega.count(q) > 0;
        const bool has_target = layout.target_map.count(q) > 0;
        if (layout.roles[q] == Role::A && (!has_omega || has_target)) {
            throw InputError("group-A qubit " + std::to_string(q) +
                             " needs an omega state and no target");
        }
        if (layout.roles[q] != Role::A && (has_omega || !has_target)) {
            throw InputError("output qubit " + std::to_string(q) +
                             " needs a target and no omega state");
        }
    }
    return layout;
}

std::string layout_to_json_string(const ClusterLayout& layout) {
    json j;
    j["rows"] = layout.lattice.rows;
    j["cols"] = layout.lattice.cols;
    j["epsilon"] = layout.default_epsilon;
    std::string roles;
    for (Role r : layout.roles) roles.push_back(static_cast<char>(r));
    j["roles"] = roles;

    j["omega"] = json::array();
    for (const auto& [q, w] : layout.omega) {
        j["omega"].push_back({{"qubit", q},
                              {"amplitudes",
                               {{w.a0.real(), w.a0.imag()}, {w.a1.real(), w.a1.imag()}}}});
    }

    json tm = json::object();
    for (const auto& [lattice_q, clique_q] : layout.target_map) {
        const CliqueSystem& sys = layout.system;
        json entry;
        if (clique_q < sys.n_interaction()) {
            entry["kind"] = "interaction";
            entry["clique_index"] = clique_q;
            entry["sites"] = sys.interaction_sites(clique_q);
            entry["J"] = sys.interaction_coupling(clique_q);
        } else {
            const int spin = clique_q - sys.n_interaction();
            entry["kind"] = "vertex";
            entry["clique_index"] = clique_q;
            entry["spin"] = spin;
            entry["J"] = sys.vertex_coupling(spin);
        }
        tm[std::to_string(lattice_q)] = entry;
    }
    j["target_map"] = tm;
    return canonical(j);
}

SpinModel load_model(const std::filesystem::path& path) {
    return model_from_json_string(read_file(path));
}

void save_model(const SpinModel& model, const std::filesystem::path& path) {
    write_file(path, model_to_json_string(model));
}

GeneralModel load_general(const std::filesystem::path& path) {
    return general_from_json_string(read_file(path));
}

void save_general(const GeneralModel& model, const std::filesystem::path& path) {
    write_file(path, general_to_json_string(model));
}

ClusterLayout load_layout(const std::filesystem::path& path) {
    return layout_from_json_string(read_file(path));
}

void save_layout(const ClusterLayout& layout, const std::filesystem::path& path) {
    write_file(path, layout_to_json_string(layout));
}

void save_state(const StateVector& state, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot open " + path.string() + " for writing");
    }
    const std::uint32_t n = static_cast<std::uint32_t>(state.n_qubits());
    out.write(reinterpret_cast<const char*>(&n), sizeof(n));
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        const double re = state.amplitude(i).real();
        const double im = state.amplitude(i).imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof(re));
        out.write(reinterpret_cast<const char*>(&im), sizeof(im));
    }
    if (!out) {
        throw InputError("failed writing state dump to " + path.string());
    }
}

StateVector load_state(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open state dump " + path.string());
    }
    std::uint32_t n = 0;
    in.read(reinterpret_cast<char*>(&n), sizeof(n));
    if (!in || n > 30) {
        throw InputError("state dump has an invalid qubit count");
    }
    StateVector state(static_cast<int>(n));
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        double re = 0.0, im = 0.0;
        in.read(reinterpret_cast<char*>(&re), sizeof(re));
        in.read(reinterpret_cast<char*>(&im), sizeof(im));
        if (!in) {
            throw InputError("state dump is truncated");
        }
        state.amplitude(i) = Complex(re, im);
    }
    return state;
}

std::uint64_t content_hash(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string file_hash_hex(const std::filesystem::path& path) {
    std::uint64_t h = content_hash(read_file(path));
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot open " + path.string() + " for writing");
    }
    out << content;
    if (!out) {
        throw InputError("failed writing " + path.string());
    }
}

}  // namespace spincast
