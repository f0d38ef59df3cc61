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

#include "ombm/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ombm/errors.hpp"

namespace ombm {

namespace {

using nlohmann::ordered_json;

ordered_json parse_document(const std::string& text, const char* what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Rational entry_to_rational(const ordered_json& value, int i, int j) {
  const std::string where =
      "costs[" + std::to_string(i) + "][" + std::to_string(j) + "]";
  try {
    if (value.is_number_integer()) {
      return Rational(value.get<long>());
    }
    if (value.is_number_float()) {
      return rational_from_double(value.get<double>());
    }
    if (value.is_string()) {
      return rational_from_string(value.get<std::string>());
    }
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a number or \"num/den\" string");
}

Instance instance_from_document(const ordered_json& doc) {
  if (!doc.is_object()) {
    throw ParseError("instance JSON: expected an object at the top level");
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("instance JSON: \"n\" must be an integer");
  }
  const int n = doc["n"].get<int>();
  if (n < 1) {
    throw ParseError("instance JSON: \"n\" must be >= 1, got " +
                     std::to_string(n));
  }
  if (!doc.contains("metric") || !doc["metric"].is_string()) {
    throw ParseError("instance JSON: \"metric\" must be a string");
  }
  const std::string metric = doc["metric"].get<std::string>();
  if (metric != "uniform" && metric != "general") {
    throw ParseError("instance JSON: metric must be \"uniform\" or "
                     "\"general\", got \"" +
                     metric + "\"");
  }

  const bool has_costs = doc.contains("costs");
  const bool has_zero_edges = doc.contains("zero_edges");
  if (has_costs == has_zero_edges) {
    throw ParseError(
        "instance JSON: exactly one of \"costs\" and \"zero_edges\" must be "
        "present");
  }

  if (has_zero_edges) {
    const auto& edges = doc["zero_edges"];
    if (!edges.is_array()) {
      throw ParseError("instance JSON: \"zero_edges\" must be an array");
    }
    std::vector<std::pair<int, int>> zero_edges;
    zero_edges.reserve(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto& pair = edges[e];
      if (!pair.is_array() || pair.size() != 2 ||
          !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
        throw ParseError("instance JSON: zero_edges[" + std::to_string(e) +
                         "] must be a pair of integers");
      }
      zero_edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    // Shorthand expands to a 0/1 matrix; under the general tag the matrix is
    // materialized densely.
    Instance uniform = Instance::uniform_from_zero_edges(n, zero_edges);
    if (metric == "uniform") return uniform;
    std::vector<Rational> costs;
    costs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) costs.push_back(uniform.cost(i, j));
    }
    return Instance::general_from_costs(n, std::move(costs));
  }

  const auto& rows = doc["costs"];
  if (!rows.is_array()) {
    throw ParseError("instance JSON: \"costs\" must be an array of rows");
  }
  if (static_cast<int>(rows.size()) != n) {
    throw ValidationError("costs has " + std::to_string(rows.size()) +
                          " rows; expected " + std::to_string(n));
  }
  std::vector<Rational> costs;
  costs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ValidationError("costs[" + std::to_string(i) + "] has " +
                            std::to_string(row.is_array() ? row.size() : 0) +
                            " entries; expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      costs.push_back(entry_to_rational(row[static_cast<std::size_t>(j)], i, j));
    }
  }
  return metric == "uniform" ? Instance::uniform_from_costs(n, costs)
                             : Instance::general_from_costs(n, std::move(costs));
}

ordered_json rational_to_entry(const Rational& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) {
    return ordered_json(value.get_num().get_si());
  }
  return ordered_json(fraction_string(value));
}

}  // namespace

Instance parse_instance_json(const std::string& text) {
  const Instance instance =
      instance_from_document(parse_document(text, "instance JSON"));
  validate(instance);
  return instance;
}

Instance load_instance_json(const std::string& path) {
  return parse_instance_json(read_file(path));
}

std::string instance_to_json(const Instance& instance) {
  ordered_json doc;
  doc["n"] = instance.n();
  doc["metric"] = instance.is_uniform() ? "uniform" : "general";
  if (instance.is_uniform()) {
    ordered_json edges = ordered_json::array();
    for (int j = 0; j < instance.n(); ++j) {
      for (int i : instance.zero_neighbors(j)) {
        edges.push_back(ordered_json::array({i, j}));
      }
    }
    doc["zero_edges"] = std::move(edges);
  } else {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < instance.n(); ++i) {
      ordered_json row = ordered_json::array();
      for (int j = 0; j < instance.n(); ++j) {
        row.push_back(rational_to_entry(instance.cost(i, j)));
      }
      rows.push_back(std::move(row));
    }
    doc["costs"] = std::move(rows);
  }
  return doc.dump();
}

PreferenceMatrix parse_prefs_json(const std::string& text) {
  const ordered_json doc = parse_document(text, "preference JSON");
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw ParseError("preference JSON: expected {\"rows\": [[...], ...]}");
  }
  std::vector<std::vector<int>> rows;
  rows.reserve(doc["rows"].size());
  for (std::size_t r = 0; r < doc["rows"].size(); ++r) {
    const auto& row = doc["rows"][r];
    if (!row.is_array()) {
      throw ParseError("preference JSON: rows[" + std::to_string(r) +
                       "] must be an array");
    }
    std::vector<int> entries;
    entries.reserve(row.size());
    for (const auto& value : row) {
      if (!value.is_number_integer()) {
        throw ParseError("preference JSON: rows[" + std::to_string(r) +
                         "] must contain integers");
      }
      entries.push_back(value.get<int>());
    }
    rows.push_back(std::move(entries));
  }
  try {
    return PreferenceMatrix(std::move(rows));
  } catch (const InvalidParameterError& e) {
    throw ParseError(std::string("preference JSON: ") + e.what());
  }
}

PreferenceMatrix load_prefs_json(const std::string& path) {
  return parse_prefs_json(read_file(path));
}

std::string prefs_to_json(const PreferenceMatrix& prefs) {
  ordered_json doc;
  doc["rows"] = prefs.rows();
  return doc.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  if (!stream.good() && !stream.eof()) {
    throw IoError("failed while reading '" + path + "'");
  }
  return buffer.str();
}

}  // namespace ombm
