#include "gdl/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace gdl {

json field_to_json(const FieldSpec& s) {
  return json{{"p", s.p}, {"e", s.e}, {"modulus", s.modulus}};
}

FieldSpec field_from_json(const json& j) {
  FieldSpec s;
  s.p = j.at("p").get<int>();
  s.e = j.at("e").get<int>();
  s.modulus = j.at("modulus").get<std::vector<int>>();
  s.q = 1;
  for (int i = 0; i < s.e; ++i) s.q *= s.p;
  return s;
}

json subspace_to_json(const Subspace& s) {
  std::vector<std::vector<int>> rows(s.dim());
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.n; ++j) rows[i].push_back(s.basis.at(i, j));
  return json{{"n", s.n}, {"rows", rows}};
}

Subspace subspace_from_json(const Field& f, const json& j) {
  int n = j.at("n").get<int>();
  auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
  Mat m(int(rows.size()), n);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (int(rows[i].size()) != n) fail_usage("subspace row length mismatch");
    for (int c = 0; c < n; ++c) {
      int x = rows[i][c];
      if (x < 0 || x >= f.q()) fail_usage("subspace entry out of field range");
      m.at(int(i), c) = Elem(x);
    }
  }
  return span_of(f, std::move(m));
}

namespace {

std::vector<uint8_t> bitset_bytes(const Bitset& b) {
  std::vector<uint8_t> bytes((b.size() + 7) / 8, 0);
  for (uint64_t i = 0; i < b.size(); ++i)
    if (b.get(i)) bytes[i >> 3] |= uint8_t(1) << (i & 7);
  return bytes;
}

Bitset bitset_from_bytes(const std::vector<uint8_t>& bytes, uint64_t n) {
  if (bytes.size() != (n + 7) / 8) fail_verify("bitset length mismatch");
  Bitset b(n);
  for (uint64_t i = 0; i < n; ++i)
    if ((bytes[i >> 3] >> (i & 7)) & 1) b.set(i);
  return b;
}

}  // namespace

json family_to_json(const Family& fam) {
  json j{{"version", "gdl-v1"},
         {"type", "family"},
         {"n", fam.n},
         {"k", fam.k},
         {"field", field_to_json(fam.field)},
         {"order", "rref-lex"},
         {"construction", fam.construction},
         {"params", fam.params},
         {"total", fam.bits.size()},
         {"size", fam.size()},
         {"bitset", base64_encode(bitset_bytes(fam.bits))}};
  if (fam.cert) {
    json weights = json::object();
    for (size_t i = 0; i < fam.cert->w.size(); ++i)
      if (fam.cert->w[i] != 0) weights[std::to_string(i)] = rat_str(fam.cert->w[i]);
    j["certificate"] = json{{"d", fam.cert->d}, {"weights", weights}};
  }
  return j;
}

Family family_from_json(const json& j) {
  if (j.at("version").get<std::string>() != "gdl-v1") fail_usage("unsupported file version");
  if (j.at("type").get<std::string>() != "family") fail_usage("not a family file");
  Family fam;
  fam.field = field_from_json(j.at("field"));
  Field f(fam.field);
  fam.n = j.at("n").get<int>();
  fam.k = j.at("k").get<int>();
  if (j.at("order").get<std::string>() != "rref-lex") fail_usage("unknown enumeration order");
  fam.construction = j.value("construction", "unknown");
  fam.params = j.value("params", json::object());
  uint64_t total = j.at("total").get<uint64_t>();
  if (total != gaussian_binomial(fam.n, fam.k, fam.field.q))
    fail_verify("family header total does not match the Grassmannian size");
  fam.bits = bitset_from_bytes(base64_decode(j.at("bitset").get<std::string>()), total);
  if (j.contains("size") && j.at("size").get<uint64_t>() != fam.size())
    fail_verify("family header size does not match the bitset");
  if (j.contains("certificate")) {
    WeightCertificate cert;
    cert.d = j.at("certificate").at("d").get<int>();
    cert.w.assign(gaussian_binomial(fam.n, cert.d, fam.field.q), Rat(0));
    for (auto it : j.at("certificate").at("weights").items()) {
      uint64_t idx = std::stoull(it.key());
      if (idx >= cert.w.size()) fail_verify("certificate index out of range");
      cert.w[idx] = rat_parse(it.value().get<std::string>());
    }
    fam.cert = std::move(cert);
  }
  return fam;
}

void save_family(const std::string& path, const Family& fam) {
  write_json_file(path, family_to_json(fam));
}

Family load_family(const std::string& path) { return family_from_json(read_json_file(path)); }

json group_to_json(const GroupFile& g) {
  json gens = json::array();
  for (const SemilinearMap& m : g.generators) {
    std::vector<std::vector<int>> rows(g.n);
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) rows[i].push_back(m.matrix.at(i, j));
    gens.push_back(json{{"matrix", rows}, {"frob", m.frob}});
  }
  return json{{"version", "gdl-v1"},
              {"type", "group"},
              {"field", field_to_json(g.field)},
              {"n", g.n},
              {"generators", gens}};
}

GroupFile group_from_json(const json& j) {
  if (j.at("version").get<std::string>() != "gdl-v1") fail_usage("unsupported file version");
  if (j.at("type").get<std::string>() != "group") fail_usage("not a group file");
  GroupFile g;
  g.field = field_from_json(j.at("field"));
  g.n = j.at("n").get<int>();
  Field f(g.field);
  for (const json& gj : j.at("generators")) {
    SemilinearMap m;
    m.frob = gj.value("frob", 0);
    auto rows = gj.at("matrix").get<std::vector<std::vector<int>>>();
    if (int(rows.size()) != g.n) fail_usage("generator has the wrong shape");
    m.matrix = Mat(g.n, g.n);
    for (int i = 0; i < g.n; ++i) {
      if (int(rows[i].size()) != g.n) fail_usage("generator has the wrong shape");
      for (int c = 0; c < g.n; ++c) m.matrix.at(i, c) = Elem(rows[i][c]);
    }
    if (!is_invertible(f, m.matrix)) fail_usage("generator matrix is singular");
    g.generators.push_back(std::move(m));
  }
  return g;
}

GroupFile load_group(const std::string& path) { return group_from_json(read_json_file(path)); }

void save_group(const std::string& path, const GroupFile& g) {
  write_json_file(path, group_to_json(g));
}

std::string digest_of(const json& payload) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(payload.dump());
  return os.str();
}

json with_manifest(const RunManifest& m, json payload) {
  json manifest{{"format", "gdl-v1"},
                {"command", m.command},
                {"seed", m.seed},
                {"threads", m.threads},
                {"enumeration_cap", m.enumeration_cap},
                {"solver_cap", m.solver_cap},
                {"wall_ms", m.wall_ms},
                {"digest", digest_of(payload)}};
  return json{{"manifest", manifest}, {"payload", std::move(payload)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_usage("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail_usage("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail_usage("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace gdl
