// Copyright 2026 The qrac Authors
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

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qrac/qrac_core.hpp"

namespace qrac {

// Strategy wire format
// --------------------
// {
//   "n": 2, "m": 1,
//   "encodings":    [ {"x": "00", "bloch": [...]}, ... 2^n entries ... ],
//   "measurements": [ {"i": 1, "alpha0": 0.5, "alpha": [...]}, ... n entries ... ]
// }
// Coordinate arrays have exactly 4^m - 1 entries in the canonical
// generator order; bit strings are unique keys of length n; the
// measurement index "i" is 1-based and must appear in order. Unknown
// extra keys (e.g. a "meta" block recording provenance) are ignored on
// read and never written.

inline nlohmann::json strategy_to_json(const QracStrategy& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["encodings"] = nlohmann::json::array();
  for (int x = 0; x < static_cast<int>(s.encodings.size()); ++x)
    j["encodings"].push_back(
        {{"x", index_to_bits(x, s.n)}, {"bloch", s.encodings[x].coords()}});
  j["measurements"] = nlohmann::json::array();
  for (int i = 0; i < static_cast<int>(s.measurements.size()); ++i)
    j["measurements"].push_back({{"i", i + 1},
                                 {"alpha0", s.measurements[i].alpha0},
                                 {"alpha", s.measurements[i].alpha.coords()}});
  return j;
}

inline QracStrategy strategy_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("strategy: top-level JSON value must be an object");
  for (const char* key : {"n", "m", "encodings", "measurements"})
    if (!j.contains(key))
      throw ValidationError(std::string("strategy: missing required key \"") + key + "\"");
  if (!j["n"].is_number_integer() || !j["m"].is_number_integer())
    throw ValidationError("strategy: \"n\" and \"m\" must be integers");
  const int n = j["n"].get<int>();
  const int m = j["m"].get<int>();
  if (n < 1 || n > 16) throw ValidationError("strategy: n must be in [1, 16]");
  if (m < 1 || m > 4) throw ValidationError("strategy: m must be in [1, 4]");
  const int dim = 1 << m;
  const int coord_len = dim * dim - 1;
  const int count = 1 << n;

  auto read_coords = [coord_len](const nlohmann::json& arr,
                                 const std::string& what) -> std::vector<double> {
    if (!arr.is_array() || static_cast<int>(arr.size()) != coord_len)
      throw ValidationError("strategy: " + what + " must be an array of exactly " +
                            std::to_string(coord_len) + " numbers");
    std::vector<double> coords(coord_len);
    for (int i = 0; i < coord_len; ++i) {
      if (!arr[i].is_number())
        throw ValidationError("strategy: " + what + " contains a non-numeric entry");
      coords[i] = arr[i].get<double>();
    }
    return coords;
  };

  const nlohmann::json& enc = j["encodings"];
  if (!enc.is_array() || static_cast<int>(enc.size()) != count)
    throw ValidationError("strategy: \"encodings\" must be an array of exactly " +
                          std::to_string(count) + " entries");
  std::vector<bool> seen(count, false);
  std::vector<BlochVector> encodings(count, BlochVector::zero(dim));
  for (const nlohmann::json& e : enc) {
    if (!e.is_object() || !e.contains("x") || !e.contains("bloch") || !e["x"].is_string())
      throw ValidationError("strategy: each encoding needs a \"x\" bit string and a \"bloch\" array");
    const std::string bits = e["x"].get<std::string>();
    if (static_cast<int>(bits.size()) != n)
      throw ValidationError("strategy: bit string \"" + bits + "\" does not have length " +
                            std::to_string(n));
    const int x = bits_to_index(bits);
    if (seen[x]) throw ValidationError("strategy: duplicate bit string \"" + bits + "\"");
    seen[x] = true;
    encodings[x] = BlochVector(dim, read_coords(e["bloch"], "encoding \"" + bits + "\""));
  }

  const nlohmann::json& meas = j["measurements"];
  if (!meas.is_array() || static_cast<int>(meas.size()) != n)
    throw ValidationError("strategy: \"measurements\" must be an array of exactly " +
                          std::to_string(n) + " entries");
  std::vector<BinaryPovmBloch> measurements;
  measurements.reserve(n);
  for (int i = 0; i < n; ++i) {
    const nlohmann::json& e = meas[i];
    if (!e.is_object() || !e.contains("i") || !e.contains("alpha0") || !e.contains("alpha"))
      throw ValidationError("strategy: each measurement needs \"i\", \"alpha0\" and \"alpha\"");
    if (!e["i"].is_number_integer() || e["i"].get<int>() != i + 1)
      throw ValidationError("strategy: measurement at position " + std::to_string(i) +
                            " must carry index i=" + std::to_string(i + 1));
    if (!e["alpha0"].is_number())
      throw ValidationError("strategy: measurement alpha0 must be a number");
    measurements.emplace_back(
        m, e["alpha0"].get<double>(),
        BlochVector(dim, read_coords(e["alpha"], "measurement " + std::to_string(i + 1))));
  }

  QracStrategy s;
  s.n = n;
  s.m = m;
  s.encodings = std::move(encodings);
  s.measurements = std::move(measurements);
  return s;
}

/// Writes the strategy (pretty-printed, two-space indent). Throws IoError
/// when the path cannot be opened or written.
inline void save_strategy(const QracStrategy& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open \"" + path + "\" for writing");
  out << strategy_to_json(s).dump(2) << '\n';
  if (!out) throw IoError("failed while writing \"" + path + "\"");
}

/// Reads a strategy file. IoError when unreadable; nlohmann parse errors
/// propagate for malformed JSON; ValidationError for schema violations.
inline QracStrategy load_strategy(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open \"" + path + "\" for reading");
  nlohmann::json j = nlohmann::json::parse(in);
  return strategy_from_json(j);
}

}  // namespace qrac
