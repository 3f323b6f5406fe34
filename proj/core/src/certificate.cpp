// Copyright 2026 The copsearch Authors
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

#include "copsearch/certificate.hpp"

#include <json.hpp>

#include <algorithm>

namespace copsearch {

namespace {

using Json = nlohmann::ordered_json;

Json set_to_json(VertexSet s) {
  Json arr = Json::array();
  for (Vertex v : s) arr.push_back(v);
  return arr;
}

VertexSet set_from_json(const Json& j, const char* field) {
  if (!j.is_array()) {
    throw CertificateError(std::string("field '") + field +
                           "' must be an array of vertex ids");
  }
  VertexSet s;
  for (const Json& e : j) {
    if (!e.is_number_integer()) {
      throw CertificateError(std::string("field '") + field +
                             "' holds a non-integer vertex id");
    }
    const auto v = e.get<long long>();
    if (v < 0 || v >= kMaxVertices) {
      throw CertificateError(std::string("field '") + field +
                             "' holds an out-of-range vertex id");
    }
    if (s.contains(static_cast<Vertex>(v))) {
      throw CertificateError(std::string("field '") + field +
                             "' repeats a vertex id");
    }
    s.insert(static_cast<Vertex>(v));
  }
  return s;
}

const Json& require(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw CertificateError(std::string("missing field '") + key + "'");
  }
  return *it;
}

}  // namespace

std::string to_json(const Certificate& cert) {
  Json j;
  j["version"] = cert.tool_version;
  j["variant"] = variant_name(cert.variant);
  j["k"] = cert.k;
  j["monotone"] = cert.monotone;
  j["graph_sha256"] = cert.graph_sha256;
  if (cert.kind == CertificateKind::kPositional) {
    j["kind"] = "positional";
    Json body = Json::array();
    for (const StrategyMove& m : cert.positional) {
      Json e;
      e["cops"] = set_to_json(m.position.cops);
      e["robber"] = m.position.robber;
      e["move"] = set_to_json(m.next);
      body.push_back(std::move(e));
    }
    j["body"] = std::move(body);
  } else {
    j["kind"] = "sequence";
    Json body = Json::array();
    for (VertexSet s : cert.sequence) body.push_back(set_to_json(s));
    j["body"] = std::move(body);
  }
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw CertificateError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw CertificateError("certificate must be an object");

  Certificate cert;
  try {
    cert.tool_version = require(j, "version").get<std::string>();
    try {
      cert.variant = parse_variant(require(j, "variant").get<std::string>());
    } catch (const UnsupportedVariant& e) {
      throw CertificateError(e.what());
    }
    cert.k = require(j, "k").get<int>();
    cert.monotone = require(j, "monotone").get<bool>();
    cert.graph_sha256 = require(j, "graph_sha256").get<std::string>();
    const auto kind = require(j, "kind").get<std::string>();
    const Json& body = require(j, "body");
    if (!body.is_array()) throw CertificateError("'body' must be an array");
    if (kind == "positional") {
      cert.kind = CertificateKind::kPositional;
      for (const Json& e : body) {
        if (!e.is_object()) {
          throw CertificateError("positional entries must be objects");
        }
        StrategyMove m;
        m.position.cops = set_from_json(require(e, "cops"), "cops");
        m.position.robber = require(e, "robber").get<int>();
        m.next = set_from_json(require(e, "move"), "move");
        if (m.position.robber < 0 || m.position.robber >= kMaxVertices) {
          throw CertificateError("robber vertex out of range");
        }
        cert.positional.push_back(m);
      }
    } else if (kind == "sequence") {
      cert.kind = CertificateKind::kSequence;
      for (const Json& e : body) cert.sequence.push_back(set_from_json(e, "body"));
    } else {
      throw CertificateError("unknown certificate kind '" + kind + "'");
    }
  } catch (const Json::exception& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  }
  if (cert.k < 0) throw CertificateError("negative cop budget");
  return cert;
}

}  // namespace copsearch
