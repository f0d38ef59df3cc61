// Copyright 2026 The OMBM Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "ombm/instance.hpp"
#include "ombm/prefs.hpp"

namespace ombm {

/// Instance file schema:
///   {"n": <int>, "metric": "uniform"|"general",
///    "costs": [[...]] | "zero_edges": [[i, j], ...]}
/// Exactly one of "costs" / "zero_edges" must be present. Cost entries may
/// be integers, floats (converted exactly), or "num/den" strings.
/// Throws ParseError for malformed JSON or schema violations (with
/// location), ValidationError for invariant violations (with coordinates).
Instance parse_instance_json(const std::string& text);
Instance load_instance_json(const std::string& path);
std::string instance_to_json(const Instance& instance);

/// Preference matrix schema: {"rows": [[...], ...]}, 0-based permutations.
PreferenceMatrix parse_prefs_json(const std::string& text);
PreferenceMatrix load_prefs_json(const std::string& path);
std::string prefs_to_json(const PreferenceMatrix& prefs);

/// Whole-file read with IoError on failure.
std::string read_file(const std::string& path);

}  // namespace ombm
