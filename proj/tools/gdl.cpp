// gdl: exact construction and certification of low-degree subspace families
// on Grassmann graphs, with companion hypercube/Johnson domains.

#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "gdl/io.hpp"
#include "gdl/selfcheck.hpp"
#include "gdl/setdomains.hpp"

using namespace gdl;
using Clock = std::chrono::steady_clock;

namespace {

struct Out {
  std::string command;
  Clock::time_point start = Clock::now();
  std::string path;  // optional file target for the payload

  void emit(json payload) {
    RunManifest m;
    m.command = command;
    m.seed = caps().seed;
    m.threads = caps().threads;
    m.enumeration_cap = caps().enumeration;
    m.solver_cap = caps().solver_rows;
    m.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    json full = with_manifest(m, std::move(payload));
    if (!path.empty()) write_json_file(path, full);
    std::cout << full.dump(2) << "\n";
  }
};

// rows like "1,0,0,0,0,0;0,1,0,0,0,0"
Subspace parse_subspace(const Field& f, int n, const std::string& spec) {
  std::vector<std::vector<Elem>> rows(1);
  std::string num;
  auto flushnum = [&](bool endrow) {
    if (!num.empty()) {
      int v = std::stoi(num);
      if (v < 0 || v >= f.q()) fail_usage("row entry out of field range");
      rows.back().push_back(Elem(v));
      num.clear();
    }
    if (endrow) rows.emplace_back();
  };
  for (char c : spec) {
    if (c == ',')
      flushnum(false);
    else if (c == ';')
      flushnum(true);
    else if (!isspace(c))
      num += c;
  }
  flushnum(false);
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  for (auto& r : rows)
    if (int(r.size()) != n) fail_usage("subspace rows must have n entries");
  return span_of_vectors(f, n, rows);
}

json verdict_json(const DegreeVerdict& v) {
  json j{{"d", v.d}, {"status", v.certified ? "certified" : "refuted"}};
  if (v.witness) j["witness"] = *v.witness;
  if (v.certificate) {
    uint64_t nz = 0;
    for (const Rat& w : v.certificate->w) nz += w != 0;
    j["certificate_nonzeros"] = nz;
  }
  return j;
}

json divisibility_json(const std::vector<DivisibilityEntry>& entries) {
  json arr = json::array();
  for (const auto& e : entries)
    arr.push_back(json{{"source", e.source},
                       {"multiplier", e.multiplier},
                       {"modulus", e.modulus},
                       {"satisfied", e.satisfied}});
  return arr;
}

json family_summary(const Family& fam, const std::string& path) {
  json j{{"construction", fam.construction},
         {"n", fam.n},
         {"k", fam.k},
         {"q", fam.field.q},
         {"size", fam.size()},
         {"total", fam.total()},
         {"params", fam.params},
         {"has_certificate", bool(fam.cert)}};
  if (!path.empty()) j["path"] = path;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"exact degree-2 families on Grassmann graphs: construction, "
               "certification, orbits and reports"};
  app.require_subcommand(1);

  uint64_t opt_cap = caps().enumeration, opt_solver = caps().solver_rows;
  uint64_t opt_seed = caps().seed;
  int opt_threads = caps().threads;
  app.add_option("--cap", opt_cap, "enumeration cap (also GDL_CAP)");
  app.add_option("--solver-cap", opt_solver, "dense degree-test cap");
  app.add_option("--seed", opt_seed, "seed for randomized commands (also GDL_SEED)");
  app.add_option("--threads", opt_threads, "worker threads, 0 = hardware (also GDL_THREADS)");

  std::string cmdline;
  for (int i = 0; i < argc; ++i) {
    if (i) cmdline += ' ';
    cmdline += argv[i];
  }

  // ---- construct ----
  auto* c = app.add_subcommand("construct", "build a family and write it to a file");
  std::string c_name, c_out, c_which = "isotropic", c_subtype = "hyperbolic",
              c_variant = "pi12", c_rows, c_rows2, c_table;
  int c_n = 6, c_k = 3, c_q = 2, c_d = 2, c_i = 0, c_sd = 3, c_arity = 2;
  uint64_t c_basis_seed = 0;
  c->add_option("name", c_name,
                "pencil | meet-profile | product | hp-union | spread | cube-lift | "
                "symplectic-planes | quadric-planes | elliptic-solids | line-plus-spread | "
                "incident-pph | sporadic-line-solid | sporadic-pplh")
      ->required();
  c->add_option("-o,--out", c_out, "output family file")->required();
  c->add_option("--n", c_n, "ambient dimension");
  c->add_option("--k", c_k, "member dimension");
  c->add_option("--q", c_q, "field order");
  c->add_option("--d", c_d, "certificate degree (pencil) / spread piece dimension");
  c->add_option("--i", c_i, "meet-profile index");
  c->add_option("--spread-d", c_sd, "spread piece dimension");
  c->add_option("--rows", c_rows, "defining subspace, rows 'a,b,..;c,d,..'");
  c->add_option("--rows2", c_rows2, "second defining subspace (product: the hyperplane)");
  c->add_option("--which", c_which, "isotropic|point-radical or f1|f2");
  c->add_option("--subtype", c_subtype, "hyperbolic|elliptic|parabolic");
  c->add_option("--variant", c_variant, "pi12|pi13");
  c->add_option("--table", c_table, "cube-lift truth table bits as integer");
  c->add_option("--arity", c_arity, "cube-lift arity");
  c->add_option("--basis-seed", c_basis_seed,
                "apply a seeded random change of basis to the defining flag");

  // ---- certify ----
  auto* ce = app.add_subcommand("certify", "degree test or certificate replay for a family");
  std::string ce_file, ce_out;
  int ce_d = 2;
  bool ce_replay = false;
  ce->add_option("--file", ce_file)->required();
  ce->add_option("--d", ce_d, "degree to test");
  ce->add_flag("--replay", ce_replay, "replay the stored certificate instead of solving");
  ce->add_option("-o,--out", ce_out, "write the family back with the solver certificate");

  // ---- equitable ----
  auto* eq = app.add_subcommand("equitable", "equitable-bipartition check");
  std::string eq_file;
  eq->add_option("--file", eq_file)->required();

  // ---- junta ----
  auto* ju = app.add_subcommand("junta", "junta dependence and covering lower bound");
  std::string ju_file, ju_refs;
  bool ju_bound = false;
  ju->add_option("--file", ju_file)->required();
  ju->add_option("--refs", ju_refs, "json file {points: [rows...], hyperplanes: [rows...]}");
  ju->add_flag("--bound", ju_bound, "compute the covering lower bound");

  // ---- divisibility ----
  auto* dv = app.add_subcommand("divisibility", "known divisibility conditions");
  std::string dv_file;
  int dv_n = 6, dv_k = 3, dv_q = 2;
  uint64_t dv_size = 0;
  dv->add_option("--file", dv_file, "take parameters and size from a family file");
  dv->add_option("--n", dv_n);
  dv->add_option("--k", dv_k);
  dv->add_option("--q", dv_q);
  dv->add_option("--size", dv_size);

  // ---- covering ----
  auto* cv = app.add_subcommand("covering", "random covering family search");
  int cv_n = 6, cv_k = 3, cv_q = 2;
  uint64_t cv_budget = 0;
  cv->add_option("--n", cv_n);
  cv->add_option("--k", cv_k);
  cv->add_option("--q", cv_q);
  cv->add_option("--budget", cv_budget, "default k^2 (n-k+1)");

  // ---- orbits / block / search-unions ----
  auto* ob = app.add_subcommand("orbits", "orbit decomposition of a group file");
  std::string ob_group;
  int ob_m = 3;
  ob->add_option("--group", ob_group)->required();
  ob->add_option("--m", ob_m, "dimension of the acted-on subspaces");

  auto* bl = app.add_subcommand("block", "orbit-count comparison on d- vs k-spaces");
  std::string bl_group;
  int bl_d = 2, bl_k = 3;
  bl->add_option("--group", bl_group)->required();
  bl->add_option("--d", bl_d);
  bl->add_option("--k", bl_k);

  auto* su = app.add_subcommand("search-unions", "degree-d orbit unions of k-spaces");
  std::string su_group, su_prefix;
  int su_d = 2, su_k = 3, su_max = 24;
  su->add_option("--group", su_group)->required();
  su->add_option("--d", su_d);
  su->add_option("--k", su_k);
  su->add_option("--max-orbits", su_max);
  su->add_option("--out-prefix", su_prefix, "write each certified union as a family file");

  // ---- group ----
  auto* gr = app.add_subcommand("group", "write a generator file for a named group");
  std::string gr_name = "symplectic", gr_out;
  int gr_n = 6, gr_q = 2;
  gr->add_option("name", gr_name, "symplectic (transvection generators)");
  gr->add_option("-o,--out", gr_out)->required();
  gr->add_option("--n", gr_n);
  gr->add_option("--q", gr_q);

  // ---- cube / johnson ----
  auto* cu = app.add_subcommand("cube", "hypercube functions");
  auto* cu_cls = cu->add_subcommand("classify", "degree-2 classes of 4-variable functions");
  auto* cu_deg = cu->add_subcommand("degree", "multilinear degree of a truth table");
  std::string cud_table;
  int cud_arity = 4;
  cu_deg->add_option("--table", cud_table)->required();
  cu_deg->add_option("--arity", cud_arity);

  auto* jo = app.add_subcommand("johnson", "set families in the Johnson graph");
  auto* jo_ex = jo->add_subcommand("example84", "the 30-member family in J(8,4)");
  auto* jo_gw = jo->add_subcommand("groupwise", "k-sets containing a block of a partition");
  int gw_n = 6, gw_d = 2, gw_k = 3;
  jo_gw->add_option("--n", gw_n);
  jo_gw->add_option("--d", gw_d);
  jo_gw->add_option("--k", gw_k);

  // ---- classify ----
  auto* cl = app.add_subcommand("classify", "type histogram of subspaces under a form");
  std::string cl_kind = "quadratic", cl_subtype = "elliptic";
  int cl_n = 6, cl_q = 2, cl_dim = 3;
  cl->add_option("--kind", cl_kind, "quadratic|symplectic");
  cl->add_option("--subtype", cl_subtype);
  cl->add_option("--n", cl_n);
  cl->add_option("--q", cl_q);
  cl->add_option("--dim", cl_dim, "dimension of the classified subspaces");

  // ---- report ----
  auto* rp = app.add_subcommand("report", "certification report over family files");
  std::vector<std::string> rp_files;
  bool rp_tables = false, rp_markdown = false;
  int rp_q = 2;
  rp->add_option("--files", rp_files, "family files")->expected(-1);
  rp->add_flag("--tables", rp_tables, "include the type-count and divisibility tables");
  rp->add_flag("--markdown", rp_markdown, "render the report as markdown");
  rp->add_option("--q", rp_q, "field order for the tables");

  // ---- selftest ----
  auto* st = app.add_subcommand("selftest", "run the acceptance checks");
  std::string st_scale = "quick";
  st->add_option("--scale", st_scale, "quick|full");

  // let the global cap/seed/thread options appear after the subcommand too
  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
    for (CLI::App* inner : sub->get_subcommands(nullptr)) inner->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  caps().enumeration = opt_cap;
  caps().solver_rows = opt_solver;
  caps().seed = opt_seed;
  caps().threads = opt_threads;

  Out out;
  out.command = cmdline;

  if (*c) {
    Field f = Field::of_order(c_q);
    Mat basis_change;
    const Mat* tf = nullptr;
    if (c_basis_seed) {
      basis_change = random_gl(f, c_n, c_basis_seed);
      tf = &basis_change;
    }
    Family fam;
    if (c_name == "symplectic-planes")
      fam = symplectic_planes(f, c_n, c_which == "point-radical" ? SympWhich::point_radical
                                                                 : SympWhich::isotropic);
    else if (c_name == "quadric-planes")
      fam = quadric_planes(f, c_n, subtype_from_name(c_subtype),
                           c_which == "f2" ? QuadricWhich::f2 : QuadricWhich::f1);
    else if (c_name == "elliptic-solids")
      fam = elliptic_solids(f);
    else if (c_name == "line-plus-spread")
      fam = line_plus_spread(f, tf);
    else if (c_name == "incident-pph")
      fam = incident_pph(f, tf);
    else if (c_name == "sporadic-line-solid")
      fam = sporadic_line_solid(
          f, c_variant == "pi13" ? LineSolidVariant::pi13 : LineSolidVariant::pi12, tf);
    else if (c_name == "sporadic-pplh")
      fam = sporadic_pplh(f, tf);
    else if (c_name == "pencil")
      fam = trivial_pencil(f, c_n, c_k, parse_subspace(f, c_n, c_rows), c_d);
    else if (c_name == "meet-profile")
      fam = trivial_meet_profile(f, c_n, c_k, parse_subspace(f, c_n, c_rows), c_i);
    else if (c_name == "product")
      fam = trivial_product(f, c_n, c_k, parse_subspace(f, c_n, c_rows),
                            parse_subspace(f, c_n, c_rows2));
    else if (c_name == "hp-union")
      fam = hyperplane_point_union(f, c_n, c_k, parse_subspace(f, c_n, c_rows));
    else if (c_name == "spread")
      fam = spread_family(f, c_n, c_sd, c_k);
    else if (c_name == "cube-lift") {
      if (c_table.empty()) fail_usage("cube-lift needs --table");
      std::vector<std::vector<Elem>> B;
      {
        // base points from --rows (semicolon-separated vectors)
        Subspace span = parse_subspace(f, c_n, c_rows);
        if (span.dim() != c_arity) fail_usage("cube-lift base vectors must be independent");
        for (int i = 0; i < span.dim(); ++i) {
          std::vector<Elem> v(c_n);
          for (int j = 0; j < c_n; ++j) v[j] = span.basis.at(i, j);
          B.push_back(v);
        }
      }
      fam = hypercube_lift(f, c_n, c_k, cube_from_bits(c_arity, std::stoull(c_table)), B);
    } else
      fail_usage("unknown construction '" + c_name + "'");
    save_family(c_out, fam);
    out.emit(family_summary(fam, c_out));
    return 0;
  }

  if (*ce) {
    Family fam = load_family(ce_file);
    Field f(fam.field);
    json payload = family_summary(fam, ce_file);
    bool above_cap = gaussian_binomial(fam.n, ce_d, f.q()) > caps().solver_rows;
    if (ce_replay || above_cap) {
      if (!fam.cert) {
        if (above_cap)
          fail_resource("degree test needs " +
                        std::to_string(gaussian_binomial(fam.n, ce_d, f.q())) +
                        " rows, above the solver cap, and the family carries no "
                        "certificate to replay");
        fail_usage("family carries no certificate to replay");
      }
      ReplayResult r = eval_certificate(f, fam, *fam.cert);
      payload["replay"] = json{{"d", fam.cert->d}, {"replays", r.replays}};
      if (r.mismatch) payload["replay"]["mismatch"] = *r.mismatch;
      if (above_cap && !ce_replay)
        payload["replay"]["reason"] = "degree test above the solver cap; replayed instead";
      out.emit(payload);
      return r.replays ? 0 : int(Errc::verify);
    }
    DegreeVerdict v = degree_test(f, fam, ce_d);
    payload["verdict"] = verdict_json(v);
    if (!ce_out.empty() && v.certified) {
      Family withcert = fam;
      withcert.cert = v.certificate;
      save_family(ce_out, withcert);
      payload["out"] = ce_out;
    }
    out.emit(payload);
    return v.certified ? 0 : int(Errc::verify);
  }

  if (*eq) {
    Family fam = load_family(eq_file);
    Field f(fam.field);
    EquitableResult r = equitable_check(f, fam);
    json payload = family_summary(fam, eq_file);
    payload["equitable"] = r.equitable;
    payload["trivial"] = r.trivial;
    if (r.equitable) {
      payload["quotient_matrix"] = {{r.qm.a, r.qm.valency - r.qm.a},
                                    {r.qm.b, r.qm.valency - r.qm.b}};
      auto eig = quotient_eigenvalues(r.qm);
      if (eig) payload["eigenvalues"] = {(*eig)[0], (*eig)[1]};
      payload["eigenvalues_in_spectrum"] = quotient_eigen_check(r.qm, fam.n, fam.k, f.q());
    }
    if (r.witness) payload["witness"] = {r.witness->first, r.witness->second};
    out.emit(payload);
    return 0;
  }

  if (*ju) {
    Family fam = load_family(ju_file);
    Field f(fam.field);
    json payload = family_summary(fam, ju_file);
    if (ju_bound) {
      CoverBound cb = junta_cover_bound(f, fam);
      payload["cover_bound"] = json{{"trivial", cb.trivial},
                                    {"alpha_star", cb.alpha_star},
                                    {"bound", cb.bound}};
    }
    if (!ju_refs.empty()) {
      json refs = read_json_file(ju_refs);
      std::vector<Subspace> R;
      for (const json& rows : refs.value("points", json::array()))
        R.push_back(subspace_from_json(f, json{{"n", fam.n}, {"rows", rows}}));
      for (const json& rows : refs.value("hyperplanes", json::array()))
        R.push_back(subspace_from_json(f, json{{"n", fam.n}, {"rows", rows}}));
      JuntaResult r = junta_depends(f, fam, R);
      payload["depends"] = r.depends;
      if (r.witness) payload["witness"] = {r.witness->first, r.witness->second};
    }
    out.emit(payload);
    return 0;
  }

  if (*dv) {
    int n = dv_n, k = dv_k, q = dv_q;
    uint64_t size = dv_size;
    json payload;
    if (!dv_file.empty()) {
      Family fam = load_family(dv_file);
      n = fam.n;
      k = fam.k;
      q = fam.field.q;
      size = fam.size();
      payload = family_summary(fam, dv_file);
    }
    auto entries = divisibility_report(n, k, q, size);
    payload["conditions"] = divisibility_json(entries);
    if (entries.empty()) payload["note"] = "no known condition for these parameters";
    out.emit(payload);
    return 0;
  }

  if (*cv) {
    Field f = Field::of_order(cv_q);
    uint64_t budget = cv_budget ? cv_budget
                                : uint64_t(cv_k) * cv_k * (cv_n - cv_k + 1);
    CoveringResult r = covering_family_search(f, cv_n, cv_k, budget, caps().seed);
    json members = json::array();
    for (const Subspace& h : r.members) members.push_back(subspace_to_json(h));
    json payload{{"n", cv_n},       {"k", cv_k},        {"q", cv_q},
                 {"budget", budget}, {"seed", r.seed},  {"success", r.success},
                 {"members", members}};
    if (r.witness) payload["witness"] = *r.witness;
    out.emit(payload);
    return 0;
  }

  if (*ob) {
    GroupFile g = load_group(ob_group);
    Field f(g.field);
    OrbitDecomposition od = orbit_decomposition(f, g.n, g.generators, ob_m);
    json sizes = json::array();
    for (const auto& o : od.orbits) sizes.push_back(o.size());
    out.emit(json{{"n", g.n}, {"m", ob_m}, {"orbits", od.orbits.size()}, {"sizes", sizes}});
    return 0;
  }

  if (*bl) {
    GroupFile g = load_group(bl_group);
    Field f(g.field);
    BlockCheck bc = block_equality_check(f, g.n, g.generators, bl_d, bl_k);
    json verdicts = json::array();
    for (const auto& v : bc.orbit_verdicts) verdicts.push_back(verdict_json(v));
    out.emit(json{{"s", bc.s}, {"t", bc.t}, {"equal", bc.equal}, {"orbit_verdicts", verdicts}});
    return 0;
  }

  if (*su) {
    GroupFile g = load_group(su_group);
    Field f(g.field);
    auto found = orbit_union_search(f, g.n, g.generators, su_d, su_k, su_max);
    json arr = json::array();
    for (size_t i = 0; i < found.size(); ++i) {
      std::string path;
      if (!su_prefix.empty()) {
        path = su_prefix + "-" + std::to_string(i) + ".json";
        save_family(path, found[i]);
      }
      arr.push_back(family_summary(found[i], path));
    }
    out.emit(json{{"certified_unions", arr}});
    return 0;
  }

  if (*gr) {
    if (gr_name != "symplectic") fail_usage("unknown group '" + gr_name + "'");
    Field f = Field::of_order(gr_q);
    GroupFile g;
    g.field = f.spec();
    g.n = gr_n;
    g.generators = symplectic_transvection_generators(f, gr_n);
    save_group(gr_out, g);
    out.emit(json{{"path", gr_out}, {"generators", g.generators.size()}, {"n", gr_n}, {"q", gr_q}});
    return 0;
  }

  if (*cu_cls) {
    CubeClassification cls = classify_degree2_small();
    out.emit(json{{"classes", cls.representatives.size()},
                  {"representatives", cls.representatives}});
    return 0;
  }
  if (*cu_deg) {
    CubeFunction fn = cube_from_bits(cud_arity, std::stoull(cud_table));
    out.emit(json{{"arity", cud_arity}, {"degree", multilinear_degree(fn)}});
    return 0;
  }

  if (*jo_ex) {
    JohnsonExample ex = johnson_example_84();
    JohnsonVerdict v = johnson_degree_test(ex.family, 2);
    out.emit(json{{"size", ex.family.size()},
                  {"quotient_matrix", {{ex.quotient[0], ex.quotient[1]},
                                       {ex.quotient[2], ex.quotient[3]}}},
                  {"degree2_certified", v.certified},
                  {"relevant_coordinates", ex.relevant_coordinates}});
    return 0;
  }
  if (*jo_gw) {
    SetFamily fam = groupwise_family(gw_n, gw_d, gw_k);
    JohnsonVerdict v = johnson_degree_test(fam, gw_d);
    out.emit(json{{"n", gw_n},
                  {"d", gw_d},
                  {"k", gw_k},
                  {"size", fam.size()},
                  {"degree_certified", v.certified}});
    return 0;
  }

  if (*cl) {
    Field f = Field::of_order(cl_q);
    FormKind kind = cl_kind == "symplectic" ? FormKind::symplectic : FormKind::quadratic;
    FormSubtype st = kind == FormKind::symplectic ? FormSubtype::symplectic_nondegenerate
                                                  : subtype_from_name(cl_subtype);
    ClassicalForm form = standard_form(f, kind, st, cl_n);
    SubspaceEnum e(f, cl_n, cl_dim);
    std::map<std::string, uint64_t> hist;
    for (uint64_t i = 0; i < e.total(); ++i)
      ++hist[classify_subspace_name(f, form, e.unrank(i))];
    json histogram = json::object();
    std::cout << "type counts over " << e.total() << " subspaces of dimension " << cl_dim
              << ":\n";
    for (const auto& [name, count] : hist) {
      histogram[name] = count;
      std::cout << "  " << name << ": " << count << "\n";
    }
    out.emit(json{{"kind", cl_kind},
                  {"subtype", subtype_name(st)},
                  {"n", cl_n},
                  {"q", cl_q},
                  {"dim", cl_dim},
                  {"histogram", histogram}});
    return 0;
  }

  if (*rp) {
    json report = json::array();
    FieldSpec mismatch_check;
    bool first = true;
    for (const std::string& file : rp_files) {
      Family fam = load_family(file);
      if (first) {
        mismatch_check = fam.field;
        first = false;
      } else if (!(fam.field == mismatch_check)) {
        fail_usage("family files use different fields");
      }
      Field f(fam.field);
      json block = family_summary(fam, file);
      bool above = gaussian_binomial(fam.n, 2, f.q()) > caps().solver_rows;
      if (!above) {
        block["degree1"] = verdict_json(degree_test(f, fam, 1));
        block["degree2"] = verdict_json(degree_test(f, fam, 2));
      } else if (fam.cert) {
        ReplayResult r = eval_certificate(f, fam, *fam.cert);
        block["replay"] = json{{"d", fam.cert->d}, {"replays", r.replays}};
      }
      block["divisibility"] = divisibility_json(
          divisibility_report(fam.n, fam.k, f.q(), fam.size()));
      EquitableResult er = equitable_check(f, fam);
      block["equitable"] = er.equitable;
      if (er.equitable && !er.trivial)
        block["quotient_matrix"] = {{er.qm.a, er.qm.valency - er.qm.a},
                                    {er.qm.b, er.qm.valency - er.qm.b}};
      CoverBound cb = junta_cover_bound(f, fam);
      if (!cb.trivial) block["junta_cover_bound"] = cb.bound;
      report.push_back(std::move(block));
    }
    json payload{{"families", report}};
    if (rp_tables) {
      json planes = json::array();
      for (const auto& row : plane_matrix_formula(rp_q)) planes.push_back(row);
      json solids = json::array();
      for (const auto& row : solid_matrix_formula(rp_q)) solids.push_back(row);
      payload["tables"] = json{
          {"plane_line_counts", planes},
          {"solid_line_counts", solids},
          {"divisibility",
           json{{"(6,3)", divisibility_json(divisibility_report(6, 3, rp_q, 0))},
                {"(7,3)", divisibility_json(divisibility_report(7, 3, rp_q, 0))},
                {"(8,4)", divisibility_json(divisibility_report(8, 4, rp_q, 0))}}}};
    }
    if (rp_markdown) {
      std::cout << "# certification report\n\n";
      for (const json& block : payload["families"]) {
        std::cout << "## " << block["construction"].get<std::string>() << " ("
                  << block.value("path", std::string{}) << ")\n";
        std::cout << "- size " << block["size"] << " of " << block["total"] << "\n";
        if (block.contains("degree2"))
          std::cout << "- degree 2: " << block["degree2"]["status"].get<std::string>() << "\n";
        if (block.contains("replay"))
          std::cout << "- replay: " << (block["replay"]["replays"].get<bool>() ? "ok" : "mismatch")
                    << "\n";
        std::cout << "- equitable: " << (block["equitable"].get<bool>() ? "yes" : "no") << "\n";
        for (const json& cond : block["divisibility"])
          std::cout << "- " << cond["source"].get<std::string>() << ": modulus "
                    << cond["modulus"] << (cond["satisfied"].get<bool>() ? " ok" : " violated")
                    << "\n";
        std::cout << "\n";
      }
      return 0;
    }
    out.emit(payload);
    return 0;
  }

  if (*st) {
    bool full = st_scale == "full";
    if (!full && st_scale != "quick") fail_usage("selftest scale must be quick or full");
    auto results = run_acceptance(full);
    int failed = 0;
    for (size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      std::printf("[%s] %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
      if (!r.detail.empty()) std::fputs(r.detail.c_str(), stdout);
      failed += !r.pass;
    }
    std::printf("%zu checks, %d failed\n", results.size(), failed);
    return failed ? int(Errc::verify) : 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return int(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return int(Errc::internal);
  }
}
