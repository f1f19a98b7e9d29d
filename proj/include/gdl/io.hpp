#pragma once

// File formats (all JSON, schema tag "gdl-v1"):
//   family: header {version, type, n, k, field, order, construction,
//           params, total, size} + base64 bitset (little-endian bytes,
//           bit i of byte j = enumeration rank 8j+i) + optional sparse
//           certificate {d, weights: {rank: "p/q"}}
//   group:  {version, type, field, n, generators: [{matrix, frob}]}
// Every CLI output embeds a run manifest; its digest covers the payload
// only, so a rerun with the same inputs reproduces the digest bit for bit.

#include <string>

#include "gdl/families.hpp"
#include "gdl/orbits.hpp"
#include "json.hpp"

namespace gdl {

using nlohmann::json;

json field_to_json(const FieldSpec& s);
FieldSpec field_from_json(const json& j);

json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Field& f, const json& j);

json family_to_json(const Family& fam);
Family family_from_json(const json& j);
void save_family(const std::string& path, const Family& fam);
Family load_family(const std::string& path);

struct GroupFile {
  FieldSpec field;
  int n = 0;
  std::vector<SemilinearMap> generators;
};
json group_to_json(const GroupFile& g);
GroupFile group_from_json(const json& j);
GroupFile load_group(const std::string& path);
void save_group(const std::string& path, const GroupFile& g);

struct RunManifest {
  std::string command;
  uint64_t seed = 0;
  int threads = 0;
  uint64_t enumeration_cap = 0;
  uint64_t solver_cap = 0;
  double wall_ms = 0;
};

// {"manifest": {... , "digest"}, "payload": payload}; the digest is the
// FNV-1a of the serialized payload
json with_manifest(const RunManifest& m, json payload);
std::string digest_of(const json& payload);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace gdl
