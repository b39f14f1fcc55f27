// Copyright 2026 The skeinkit Authors
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

#ifndef SKEINKIT_IO_HPP
#define SKEINKIT_IO_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "skeinkit/braid.hpp"
#include "skeinkit/circuit.hpp"
#include "skeinkit/potts.hpp"

namespace skeinkit {

using Json = nlohmann::json;

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Usage, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json matrix_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

namespace detail {

inline Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Parse, std::string(what) + " parse error at byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

/// Runs f, turning JSON type errors into Parse failures.
template <class F>
auto json_guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(ErrorKind::Parse, std::string(what) + ": " + e.what());
  }
}

inline Complex complex_of(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) fail(ErrorKind::Parse, "complex entries are numbers or [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline CMatrix matrix_of(const Json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::Parse, "matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols) fail(ErrorKind::Parse, "ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_of(j[i][k]);
  }
  return m;
}

}  // namespace detail

// ---- braids ----

inline Json braid_to_json(const BraidWord& w) {
  Json letters = Json::array();
  for (const auto& l : w.letters()) letters.push_back(Json::array({l.index, l.sign}));
  return {{"n_strands", w.n_strands()}, {"letters", letters}};
}

inline BraidWord braid_from_json(const Json& j) {
  return detail::json_guard("braid", [&] {
    int n = j.at("n_strands").get<int>();
    if (n < 1) fail(ErrorKind::Parse, "braid: n_strands must be >= 1");
    BraidWord w(n);
    for (const auto& l : j.at("letters")) {
      if (!l.is_array() || l.size() != 2) fail(ErrorKind::Parse, "braid: letters are [i, sign]");
      int i = l[0].get<int>(), s = l[1].get<int>();
      if (i < 1 || i >= n || (s != 1 && s != -1)) fail(ErrorKind::Parse, "braid: letter out of range");
      w.push(i, s);
    }
    return w;
  });
}

/// Text grammar "B<n>: s1 s2^-1 ..." or the JSON form, chosen by the first
/// non-blank character.
inline BraidWord parse_braid_any(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && text[p] == '{') return braid_from_json(detail::parse_json(text, "braid"));
  return parse_braid(text);
}

// ---- circuits ----

inline Json circuit_to_json(const QuantumCircuit& c) {
  Json gates = Json::array();
  for (const auto& g : c.gates()) {
    Json jg = {{"type", to_string(g.type)}, {"qubits", g.qubits}};
    if (g.type == GateType::U1 || g.type == GateType::U2) jg["matrix"] = matrix_json(g.matrix);
    if (g.linear) jg["linear"] = true;
    gates.push_back(jg);
  }
  return {{"n_qubits", c.n_qubits()}, {"gates", gates}};
}

inline QuantumCircuit circuit_from_json(const Json& j) {
  return detail::json_guard("circuit", [&] {
    QuantumCircuit c(j.at("n_qubits").get<int>());
    for (const auto& jg : j.at("gates")) {
      const std::string t = jg.at("type").get<std::string>();
      Gate g;
      if (t == "H") g.type = GateType::H;
      else if (t == "X") g.type = GateType::X;
      else if (t == "CNOT") g.type = GateType::CNOT;
      else if (t == "Toffoli") g.type = GateType::Toffoli;
      else if (t == "U1") g.type = GateType::U1;
      else if (t == "U2") g.type = GateType::U2;
      else fail(ErrorKind::Parse, "circuit: unknown gate type " + t);
      g.qubits = jg.at("qubits").get<std::vector<int>>();
      if (jg.contains("matrix")) g.matrix = detail::matrix_of(jg["matrix"]);
      g.linear = jg.value("linear", false);
      c.add(std::move(g));
    }
    return c;
  });
}

inline QuantumCircuit parse_circuit(const std::string& text) {
  return circuit_from_json(detail::parse_json(text, "circuit"));
}

// ---- graphs ----

inline Json graph_to_json(const PottsGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json::array({e.u, e.v, e.y}));
  return {{"vertices", g.vertices}, {"edges", edges}, {"boundary", g.boundary}, {"planar", g.planar}};
}

inline PottsGraph graph_from_json(const Json& j) {
  return detail::json_guard("graph", [&] {
    PottsGraph g(j.at("vertices").get<int>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) fail(ErrorKind::Parse, "graph: edges are [u, v, y]");
      g.add_edge(e[0].get<int>(), e[1].get<int>(), e[2].get<double>());
    }
    if (j.contains("boundary")) g.boundary = j["boundary"].get<std::vector<int>>();
    g.planar = j.value("planar", false);
    g.validate();
    return g;
  });
}

inline PottsGraph parse_graph(const std::string& text) { return graph_from_json(detail::parse_json(text, "graph")); }

}  // namespace skeinkit

#endif  // SKEINKIT_IO_HPP
