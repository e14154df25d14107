#include "althecke/json_io.hpp"

namespace althecke {

Json to_json(Scalar z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Multipartition& mp) {
  Json out = Json::array();
  for (const auto& part : mp.components) out.push_back(part);
  return out;
}

Json to_json(const StdTableau& t) { return t.rows(); }

Json to_json(const AlgebraParams& p) {
  Json j;
  j["n"] = p.n;
  j["level"] = p.level;
  if (p.e) {
    j["e"] = *p.e;
    j["xi_num"] = p.xi_num;
  } else {
    j["e"] = nullptr;  // infinite: xi = 1
  }
  j["xi"] = to_json(p.xi);
  j["kappa"] = p.kappa;
  j["tol"] = p.tol;
  return j;
}

Json to_json(const AxiomReport& r) {
  Json j;
  j["commuting"] = r.commuting;
  j["braid"] = r.braid;
  j["pair"] = r.pair;
  if (r.alternating_checked) j["antisymmetry"] = r.alternating;
  j["instances"] = r.instances;
  j["max"] = r.max();
  return j;
}

Json to_json(const RelationReport& r) {
  Json j;
  for (const auto& [name, v] : r.families()) j[name] = v;
  j["instances"] = r.instances;
  j["max"] = r.max();
  return j;
}

Json to_json(const IdempotentReport& r) {
  Json j;
  j["completeness"] = r.completeness;
  j["idempotent"] = r.idempotent;
  j["orthogonality"] = r.orthogonality;
  j["routes"] = r.routes;
  j["matrix_units"] = r.matrix_units;
  j["structure"] = r.structure;
  j["star_transpose"] = r.star_transpose;
  j["residue_family"] = r.residue_family;
  j["gamma_path"] = r.gamma_path;
  j["max"] = r.max();
  return j;
}

Json to_json(const HashReport& r) {
  Json j;
  for (const auto& [name, v] : r.families()) {
    if (name == "altcs" && !r.altcs_checked) continue;
    j[name] = v;
  }
  j["random_pairs"] = r.random_pairs;
  j["max"] = r.max();
  return j;
}

Json to_json(const AltDimension& d) {
  Json j;
  j["expected"] = d.expected;
  j["span_rank"] = d.span_rank;
  j["fixed_dim"] = d.fixed_dim;
  j["hypothesis"] = d.hypothesis;
  j["ill_conditioned"] = d.ill_conditioned;
  j["ok"] = d.ok();
  return j;
}

Json specht_json(const SpechtBlock& blk, const TableauCatalog& cat, const GammaTable& gamma) {
  Json j;
  j["lambda"] = to_json(blk.lambda);
  Json basis = Json::array();
  Json gam = Json::array();
  for (std::size_t i = 0; i < cat.dim(blk.shape); ++i) {
    basis.push_back(to_json(cat.at({blk.shape, i})));
    gam.push_back(to_json(gamma({blk.shape, i})));
  }
  j["basis"] = std::move(basis);
  j["gamma"] = std::move(gam);
  Json L = Json::array(), T = Json::array();
  for (const auto& m : blk.L) L.push_back(to_json(m));
  for (const auto& m : blk.T) T.push_back(to_json(m));
  j["generators"] = {{"L", std::move(L)}, {"T", std::move(T)}};
  return j;
}

Json classification_json(const Classification& c, const AlgebraParams& p) {
  Json j;
  j["params"] = to_json(p);
  Json irreps = Json::array();
  for (std::size_t i = 0; i < c.irreps.size(); ++i) {
    const auto& ir = c.irreps[i];
    Json x;
    x["label"] = ir.label;
    x["dim"] = ir.dim;
    Json tr = Json::array();
    for (auto t : ir.traces) tr.push_back(to_json(t));
    x["traces"] = std::move(tr);
    x["commutant_dim"] = ir.commutant;
    x[ir.sign == 0 ? "intertwiner_residual" : "leakage_residual"] = ir.certificate;
    if (!c.t1t2.empty()) x[c.t1t2_scalar ? "T1T2_scalar" : "T1T2_trace"] = to_json(c.t1t2[i]);
    irreps.push_back(std::move(x));
  }
  j["irreps"] = std::move(irreps);
  Json checks;
  checks["dim_formula"] = {{"expected", c.expected},
                           {"span_rank", c.dimension.span_rank},
                           {"fixed_dim", c.dimension.fixed_dim},
                           {"hypothesis", c.dimension.hypothesis},
                           {"ok", c.dimension.ok()}};
  checks["sum_squares"] = {{"expected", c.expected},
                           {"from_tableaux", c.sum_squares},
                           {"from_modules", c.sum_squares_matrices},
                           {"ok", c.sum_ok()}};
  checks["commutants"] = {{"all_one", c.commutants_ok}};
  checks["pairwise_distinct"] = {{"ok", c.distinct_ok}, {"min_trace_gap", c.min_trace_gap}};
  checks["certificates"] = {{"max_residual", c.certificates}, {"orbit_residual", c.orbit}};
  j["checks"] = std::move(checks);
  j["ok"] = c.ok(p.tol) && c.dimension.ok();
  return j;
}

}  // namespace althecke
