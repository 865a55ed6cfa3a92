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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "spincast/compiler.hpp"
#include "spincast/spin_model.hpp"
#include "spincast/state_vector.hpp"

namespace spincast {

// Model files are canonical JSON: alphabetically ordered keys, two-space
// indentation, shortest round-trip floats, trailing newline. Saving a loaded
// canonical file reproduces it byte for byte.
//
//   model:   {"n_spins": int, "offset": float,
//             "terms": [{"J": float, "sites": [int, ...]}, ...]}
//   general: {"interactions": [{"sites": [...], "table": [float, ...]}, ...],
//             "q": int}
//   layout:  {"cols": int, "epsilon": float,
//             "omega": [{"amplitudes": [[re, im], [re, im]], "qubit": int}, ...],
//             "roles": "AACB...", "rows": int, "target_map": {...}}
//
// General-model tables are row-major with the first listed site as the most
// significant digit.

SpinModel model_from_json_string(const std::string& text);
std::string model_to_json_string(const SpinModel& model);
SpinModel load_model(const std::filesystem::path& path);
void save_model(const SpinModel& model, const std::filesystem::path& path);

GeneralModel general_from_json_string(const std::string& text);
std::string general_to_json_string(const GeneralModel& model);
GeneralModel load_general(const std::filesystem::path& path);
void save_general(const GeneralModel& model, const std::filesystem::path& path);

ClusterLayout layout_from_json_string(const std::string& text);
std::string layout_to_json_string(const ClusterLayout& layout);
ClusterLayout load_layout(const std::filesystem::path& path);
void save_layout(const ClusterLayout& layout, const std::filesystem::path& path);

/// Debug state dump: little-endian u32 qubit count followed by (real, imag)
/// little-endian doubles in amplitude-index order.
void save_state(const StateVector& state, const std::filesystem::path& path);
StateVector load_state(const std::filesystem::path& path);

/// FNV-1a 64-bit content hash (provenance, not cryptographic).
std::uint64_t content_hash(const std::string& bytes);
std::string file_hash_hex(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace spincast
