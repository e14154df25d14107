#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace althecke::cli {

namespace {

constexpr long long kDeskLimit = 100000;

std::vector<int> parse_kappa(const std::string& text, int level) {
  if (text.empty()) return std::vector<int>(static_cast<std::size_t>(level), 0);
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad multicharge entry '" + item + "'");
    }
  }
  if (static_cast<int>(out.size()) != level)
    throw std::invalid_argument("multicharge has " + std::to_string(out.size()) + " entries, level is " +
                                std::to_string(level));
  return out;
}

Json error_report(const std::string& what) { return Json{{"error", what}}; }

// common preamble; returns an exit code on failure
std::optional<int> prepare(const RunConfig& cfg, AlgebraParams& p, Json& report) {
  try {
    p = make_params(cfg);
  } catch (const std::invalid_argument& e) {
    report = error_report(e.what());
    return usage;
  }
  if (p.algebra_dimension() > kDeskLimit && !cfg.force) {
    report = error_report("algebra dimension " + std::to_string(p.algebra_dimension()) +
                          " exceeds the desk-scale limit; pass --force to run anyway");
    return usage;
  }
  return std::nullopt;
}

Json semisimplicity(const AlgebraParams& p) {
  return Json{{"ariki_P", to_json(ariki_P(p))}, {"semisimple", semisimple(p)}};
}

}  // namespace

AlgebraParams make_params(const RunConfig& cfg) {
  if (cfg.level < 1) throw std::invalid_argument("level must be at least 1");
  if (cfg.n < 0) throw std::invalid_argument("n must be non-negative");
  const auto kappa = parse_kappa(cfg.kappa, cfg.level);
  if (cfg.xi_one) {
    if (cfg.e) throw std::invalid_argument("--xi-one (e = infinity) cannot be combined with --e");
    return AlgebraParams::unit(cfg.n, kappa, cfg.tol);
  }
  if (!cfg.e) throw std::invalid_argument("give either --e or --xi-one");
  return AlgebraParams::root_of_unity(cfg.n, kappa, *cfg.e, cfg.xi_num, cfg.tol);
}

int cmd_tableaux(const RunConfig& cfg, Json& report) {
  AlgebraParams p;
  if (auto code = prepare(cfg, p, report)) return *code;
  const TableauCatalog cat(p.n, p.level);
  report = Json::object();
  report["params"] = to_json(p);
  Json shapes = Json::array();
  for (std::size_t s = 0; s < cat.shapes().size(); ++s) {
    Json js;
    js["lambda"] = to_json(cat.shapes()[s]);
    js["conjugate"] = cat.conjugate_shape(s);
    js["dim"] = cat.dim(s);
    Json tabs = Json::array();
    for (const auto& t : cat.tableaux(s)) {
      tabs.push_back(Json{{"rows", to_json(t)},
                          {"contents", content_seq(t, p.kappa)},
                          {"residues", residue_seq(t, p)}});
    }
    js["tableaux"] = std::move(tabs);
    shapes.push_back(std::move(js));
  }
  report["shapes"] = std::move(shapes);
  report["num_shapes"] = cat.shapes().size();
  report["num_tableaux"] = cat.total_tableaux();
  Json sc = Json::array();
  for (const auto& c : mp_classes(cat.shapes())) sc.push_back(Json{{"plus", c.plus}, {"minus", c.minus}});
  report["shape_classes"] = std::move(sc);
  Json rc = Json::array();
  for (const auto& c : residue_classes_of(occurring_residues(cat, p), p))
    rc.push_back(Json{{"plus", c.plus}, {"minus", c.minus}});
  report["residue_classes"] = std::move(rc);
  return ok;
}

int cmd_specht(const RunConfig& cfg, Json& report) {
  AlgebraParams p;
  if (auto code = prepare(cfg, p, report)) return *code;
  SystemKind kind;
  if (cfg.system == "alternating")
    kind = SystemKind::alternating;
  else if (cfg.system == "james")
    kind = SystemKind::james;
  else {
    report = error_report("unknown coefficient system '" + cfg.system + "'");
    return usage;
  }
  if (kind == SystemKind::alternating && !p.symmetric_kappa()) {
    report = error_report("the alternating system needs a symmetric multicharge; use --system james");
    return usage;
  }
  if (cfg.lambda.empty()) {
    report = error_report("specht needs --lambda");
    return usage;
  }
  Multipartition lambda;
  try {
    lambda = parse_multipartition(cfg.lambda, p.level);
  } catch (const std::invalid_argument& e) {
    report = error_report(e.what());
    return usage;
  }
  if (!semisimple(p)) {
    report = Json{{"params", to_json(p)}, {"semisimplicity", semisimplicity(p)}, {"status", "not semisimple"}};
    return not_semisimple;
  }
  const TableauCatalog cat(p.n, p.level);
  const auto shape = cat.find_shape(lambda);
  if (!shape) {
    report = error_report(lambda.to_string() + " is not a multipartition of " + std::to_string(p.n) +
                          " with " + std::to_string(p.level) + " components");
    return usage;
  }
  const CoefficientSystem cs(kind, p, cat);
  const GammaTable gamma = gamma_table(cs);
  const SpechtBlock blk = specht_block(*shape, cs);
  report = specht_json(blk, cat, gamma);
  report["system"] = to_string(kind);
  report["params"] = to_json(p);
  Generators g;
  for (const auto& m : blk.L) g.L.emplace_back(std::vector<Matrix>{m});
  for (const auto& m : blk.T) g.T.emplace_back(std::vector<Matrix>{m});
  const auto rel = verify_relations(g, p, {static_cast<Eigen::Index>(blk.dim())});
  report["relations"] = to_json(rel);
  return rel.passed(p.tol) ? ok : check_failed;
}

int cmd_verify(const RunConfig& cfg, Json& report) {
  AlgebraParams p;
  if (auto code = prepare(cfg, p, report)) return *code;
  const bool want_hash = !cfg.no_hash;
  if (want_hash && !p.symmetric_kappa()) {
    report = error_report("hash checks need a symmetric multicharge (or pass --no-hash)");
    return usage;
  }
  report = Json::object();
  report["params"] = to_json(p);
  report["semisimplicity"] = semisimplicity(p);
  if (!semisimple(p)) {
    report["status"] = "not semisimple: seminormal, idempotent and hash suites skipped";
    return not_semisimple;
  }
  const double tol = p.tol;
  bool pass = true;
  auto note = [&](Json& section, bool good) {
    section["passed"] = good;
    pass = pass && good;
  };

  const SystemKind kind = p.symmetric_kappa() ? SystemKind::alternating : SystemKind::james;
  const auto inst = Instance::build(p, kind);
  const auto& rep = *inst->rep;

  Json axioms;
  {
    const CoefficientSystem james(SystemKind::james, p, *inst->catalog);
    const auto a = verify_coefficient_axioms(james);
    Json j = to_json(a);
    note(j, a.passed(tol));
    axioms["james"] = std::move(j);
    const auto gj = gamma_table(james);
    axioms["james"]["gamma_path"] = gj.path_residual;
  }
  if (kind == SystemKind::alternating) {
    const auto a = verify_coefficient_axioms(*inst->system);
    Json j = to_json(a);
    note(j, a.passed(tol));
    j["gamma_path"] = inst->gamma.path_residual;
    axioms["alternating"] = std::move(j);
  }
  report["coefficient_axioms"] = std::move(axioms);

  const auto rel = verify_relations(rep.generators(), p, rep.dims());
  Json jr = to_json(rel);
  jr["affine_jm"] = affine_jm_residual(rep.generators(), p);
  note(jr, rel.passed(tol) && jr["affine_jm"].get<double>() < tol);
  report["relations"] = std::move(jr);

  const auto idem = check_idempotents(rep, inst->gamma);
  Json ji = to_json(idem);
  note(ji, idem.passed(tol));
  report["idempotents"] = std::move(ji);

  const auto basis = ak_basis(rep.generators(), p.level, rep.dims());
  const auto rank = rank_of_span(basis, tol);
  Json ja{{"elements", basis.size()}, {"rank", rank.rank}, {"expected", p.algebra_dimension()},
          {"ill_conditioned", rank.ill_conditioned}};
  note(ja, rank.rank == p.algebra_dimension());
  report["ak_basis"] = std::move(ja);

  if (want_hash) {
    const HashMap h = hash_map(rep);
    const auto hr = check_hash_calculus(rep, inst->gamma, h);
    Json jh = to_json(hr);
    note(jh, hr.passed(tol));
    report["hash"] = std::move(jh);

    const auto span = alt_spanning_set(h);
    const auto dim = alt_dimension(rep, h, span);
    Json jd = to_json(dim);
    note(jd, dim.ok());
    if (dim.hypothesis) {
      const BlockMatrix eps = epsilon_element(rep);
      const double sq = rel_distance(eps * eps, rep.identity());
      const double neg = rel_distance(h.apply(eps), -eps);
      jd["epsilon"] = Json{{"square_is_one", sq}, {"hash_is_minus", neg}};
      note(jd, dim.ok() && sq < tol && neg < tol);
    } else {
      jd["epsilon"] = "skipped: some residue sequence is fixed by negation";
    }
    report["alternating_dimension"] = std::move(jd);
  } else {
    report["hash"] = "skipped (--no-hash)";
  }
  report["passed"] = pass;
  return pass ? ok : check_failed;
}

int cmd_classify(const RunConfig& cfg, Json& report) {
  AlgebraParams p;
  if (auto code = prepare(cfg, p, report)) return *code;
  if (!p.symmetric_kappa()) {
    report = error_report("classification needs a symmetric multicharge");
    return usage;
  }
  if (p.n < 2) {
    report = error_report("classification needs n >= 2");
    return usage;
  }
  if (!semisimple(p)) {
    report = Json{{"params", to_json(p)}, {"semisimplicity", semisimplicity(p)}, {"status", "not semisimple"}};
    return not_semisimple;
  }
  const auto inst = Instance::build(p, SystemKind::alternating);
  const auto c = classify(*inst);
  report = classification_json(c, p);
  return report["ok"].get<bool>() ? ok : check_failed;
}

int cmd_report(const RunConfig& cfg, Json& report) {
  Json v, c;
  const int a = cmd_verify(cfg, v);
  report = Json::object();
  report["verify"] = std::move(v);
  if (a == usage || a == not_semisimple) return a;
  const int b = cmd_classify(cfg, c);
  report["classify"] = std::move(c);
  return std::max(a, b);
}

namespace {

bool is_leaf_array(const Json& j) {
  for (const auto& x : j)
    if (x.is_structured() && !(x.is_array() && x.size() == 2 && x[0].is_number())) return false;
  return true;
}

void render(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive() || (v.is_array() && is_leaf_array(v))) {
        os << pad << k << ": " << v.dump() << "\n";
      } else {
        os << pad << k << ":\n";
        render(v, indent + 2, os);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive() || (v.is_array() && is_leaf_array(v))) {
        os << pad << "- " << v.dump() << "\n";
      } else {
        os << pad << "-\n";
        render(v, indent + 2, os);
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semisimple cyclotomic Hecke algebras, the hash involution and the alternating subalgebra"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of strands")->required();
    sub->add_option("--level", cfg.level, "level (number of components)")->default_val(1);
    sub->add_option("--e", cfg.e, "quantum characteristic; xi = exp(2 pi i j / e)");
    sub->add_option("--xi-num", cfg.xi_num, "j in xi = exp(2 pi i j / e)")->default_val(1);
    sub->add_flag("--xi-one", cfg.xi_one, "xi = 1 (e = infinity)");
    sub->add_option("--kappa", cfg.kappa, "multicharge, comma separated (default all zeros)");
    sub->add_option("--tol", cfg.tol, "tolerance")->default_val(kDefaultTolerance);
    sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}))->default_val("json");
    sub->add_option("--out", cfg.out, "write the report to this file");
    sub->add_flag("--force", cfg.force, "lift the desk-scale size guard");
  };
  auto* t = app.add_subcommand("tableaux", "list multipartitions, tableaux, contents and classes");
  auto* s = app.add_subcommand("specht", "Specht module generator matrices");
  auto* v = app.add_subcommand("verify", "run every verification suite");
  auto* c = app.add_subcommand("classify", "classify the irreducible modules of the alternating subalgebra");
  auto* r = app.add_subcommand("report", "verify and classify");
  for (auto* sub : {t, s, v, c, r}) common(sub);
  s->add_option("--lambda", cfg.lambda, "multipartition, e.g. 2,1 or 2,1|1")->required();
  s->add_option("--system", cfg.system, "alternating or james")->default_val("alternating");
  v->add_flag("--no-hash", cfg.no_hash, "skip hash and alternating checks");
  r->add_flag("--no-hash", cfg.no_hash, "skip hash and alternating checks");

  std::vector<std::string> argv_store{"althecke"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  for (auto* sub : {t, s, v, c, r})
    if (sub->parsed()) cfg.command = sub->get_name();

  Json report;
  int code = ok;
  try {
    if (cfg.command == "tableaux") code = cmd_tableaux(cfg, report);
    else if (cfg.command == "specht") code = cmd_specht(cfg, report);
    else if (cfg.command == "verify") code = cmd_verify(cfg, report);
    else if (cfg.command == "classify") code = cmd_classify(cfg, report);
    else code = cmd_report(cfg, report);
  } catch (const std::invalid_argument& e) {
    report = error_report(e.what());
    code = usage;
  } catch (const std::exception& e) {
    report = error_report(e.what());
    code = check_failed;
  }

  if (report.contains("error")) err << "error: " << report["error"].get<std::string>() << "\n";
  const std::string text = cfg.format == "text" ? render_text(report) : report.dump(2) + "\n";
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) {
      err << "error: cannot write " << cfg.out << "\n";
      return usage;
    }
    f << text;
  } else {
    out << text;
  }
  return code;
}

}  // namespace althecke::cli
