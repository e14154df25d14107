#include "althecke/hecke.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

namespace althecke {

RegularRep::RegularRep(const CoefficientSystem& cs, Exec exec) : cs_(cs) {
  const auto& p = cs_.params();
  if (!semisimple(p)) throw DomainError("parameters are not semisimple (P_H = 0): " + p.describe());
  const auto& cat = cs_.catalog();
  const std::size_t m = cat.shapes().size();
  blocks_.resize(m);
  if (exec == Exec::parallel) {
    // exceptions must not escape the parallel region
    std::vector<std::string> errors(m);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < m; ++s) {
      try {
        blocks_[s] = specht_block(s, cs_);
      } catch (const std::exception& e) {
        errors[s] = e.what();
      }
    }
    for (const auto& e : errors)
      if (!e.empty()) throw DomainError(e);
  } else {
    for (std::size_t s = 0; s < m; ++s) blocks_[s] = specht_block(s, cs_);
  }
  for (const auto& b : blocks_) dims_.push_back(static_cast<Eigen::Index>(b.dim()));
  const int n = p.n;
  for (int k = 1; k <= n; ++k) {
    std::vector<Matrix> bl;
    for (const auto& b : blocks_) bl.push_back(b.L[k - 1]);
    gens_.L.emplace_back(std::move(bl));
  }
  for (int r = 1; r < n; ++r) {
    std::vector<Matrix> bl;
    for (const auto& b : blocks_) bl.push_back(b.T[r - 1]);
    gens_.T.emplace_back(std::move(bl));
  }
}

Eigen::Index RegularRep::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), Eigen::Index{0}); }

Eigen::Index RegularRep::algebra_dim() const {
  Eigen::Index s = 0;
  for (auto d : dims_) s += d * d;
  return s;
}

BlockMatrix RegularRep::embed(std::size_t shape, const Matrix& m) const {
  BlockMatrix out = zero();
  out.block(shape) = m;
  return out;
}

std::unique_ptr<Instance> Instance::build(const AlgebraParams& params, SystemKind kind, Exec exec) {
  if (!semisimple(params))
    throw DomainError("parameters are not semisimple (P_H = 0): " + params.describe());
  auto inst = std::make_unique<Instance>();
  inst->params = params;
  inst->catalog = std::make_unique<TableauCatalog>(params.n, params.level);
  inst->system = std::make_unique<CoefficientSystem>(kind, params, *inst->catalog);
  inst->rep = std::make_unique<RegularRep>(*inst->system, exec);
  inst->gamma = gamma_table(*inst->system);
  return inst;
}

std::vector<int> reduced_word(const Permutation& w) {
  Permutation v = w;
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        swaps.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

BlockMatrix word_product(const Generators& g, const std::vector<int>& word, const Dims& dims) {
  BlockMatrix out = BlockMatrix::identity(dims);
  for (int r : word) out = out * g.T.at(r - 1);
  return out;
}

BlockMatrix t_word(const Generators& g, const Permutation& w, const Dims& dims) {
  return word_product(g, reduced_word(w), dims);
}

std::vector<Permutation> all_permutations(int n) {
  Permutation w(n);
  std::iota(w.begin(), w.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<BlockMatrix> ak_basis(const Generators& g, int level, const Dims& dims, Exec exec) {
  const int n = static_cast<int>(g.L.size());
  const auto perms = all_permutations(n);
  const std::size_t np = perms.size();
  std::size_t nexp = 1;
  for (int i = 0; i < n; ++i) nexp *= static_cast<std::size_t>(level);

  std::vector<BlockMatrix> tw(np);
  std::vector<BlockMatrix> lpow(nexp);
  auto make_t = [&](std::size_t i) { tw[i] = t_word(g, perms[i], dims); };
  auto make_l = [&](std::size_t idx) {
    // idx in base `level`, most significant digit = exponent of L_1
    std::vector<int> c(n);
    std::size_t rest = idx;
    for (int k = n - 1; k >= 0; --k) {
      c[k] = static_cast<int>(rest % level);
      rest /= level;
    }
    BlockMatrix m = BlockMatrix::identity(dims);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < c[k]; ++j) m = m * g.L[k];
    lpow[idx] = std::move(m);
  };
  std::vector<BlockMatrix> out(nexp * np);
  auto make_out = [&](std::size_t idx) { out[idx] = lpow[idx / np] * tw[idx % np]; };

  const auto total = out.size();
  if (exec == Exec::parallel) {
#pragma omp parallel
    {
#pragma omp for schedule(dynamic) nowait
      for (std::size_t i = 0; i < np; ++i) make_t(i);
#pragma omp for schedule(dynamic)
      for (std::size_t i = 0; i < nexp; ++i) make_l(i);
#pragma omp for schedule(dynamic)
      for (std::size_t i = 0; i < total; ++i) make_out(i);
    }
  } else {
    for (std::size_t i = 0; i < np; ++i) make_t(i);
    for (std::size_t i = 0; i < nexp; ++i) make_l(i);
    for (std::size_t i = 0; i < total; ++i) make_out(i);
  }
  return out;
}

double RelationReport::max() const {
  return std::max({cyclotomic, quadratic, braid, t_commute, l_commute, tl_commute, mixed});
}

std::vector<std::pair<std::string, double>> RelationReport::families() const {
  return {{"cyclotomic", cyclotomic}, {"quadratic", quadratic},   {"braid", braid},
          {"T_commute", t_commute},   {"L_commute", l_commute},   {"TL_commute", tl_commute},
          {"mixed", mixed}};
}

RelationReport verify_relations(const Generators& g, const AlgebraParams& p, const Dims& dims) {
  RelationReport rep;
  const int n = static_cast<int>(g.L.size());
  const Scalar xi = p.xi;
  auto bump = [&rep](double& slot, double v) {
    slot = std::max(slot, v);
    ++rep.instances;
  };

  if (n >= 1) {
    BlockMatrix prod = BlockMatrix::identity(dims);
    double scale = 1.0;
    for (int kap : p.kappa) {
      BlockMatrix f = g.L[0].plus_scalar(-p.qint(kap));
      scale *= std::max(1.0, f.norm());
      prod = prod * f;
    }
    bump(rep.cyclotomic, prod.norm() / scale);
  }
  for (int r = 1; r < n; ++r) {
    const auto& T = g.T[r - 1];
    bump(rep.quadratic, rel_distance(T * T, (xi - 1.0) * T + BlockMatrix::identity(dims) * xi));
    if (r + 1 < n) {
      const auto& U = g.T[r];
      bump(rep.braid, rel_distance(T * U * T, U * T * U));
    }
    for (int s = r + 2; s < n; ++s) bump(rep.t_commute, rel_distance(T * g.T[s - 1], g.T[s - 1] * T));
    for (int k = 1; k <= n; ++k) {
      if (k == r || k == r + 1) continue;
      bump(rep.tl_commute, rel_distance(T * g.L[k - 1], g.L[k - 1] * T));
    }
    bump(rep.mixed, rel_distance(g.L[r] * T.plus_scalar(1.0 - xi), (T * g.L[r - 1]).plus_scalar(1.0)));
  }
  for (int k = 1; k <= n; ++k)
    for (int m = k + 1; m <= n; ++m)
      bump(rep.l_commute, rel_distance(g.L[k - 1] * g.L[m - 1], g.L[m - 1] * g.L[k - 1]));
  return rep;
}

double affine_jm_residual(const Generators& g, const AlgebraParams& p) {
  if (p.xi_is_one()) return 0.0;
  const Scalar a = p.xi - 1.0;
  double worst = 0.0;
  for (std::size_t k = 1; k < g.L.size(); ++k) {
    const BlockMatrix prev = (g.L[k - 1] * a).plus_scalar(1.0);
    const BlockMatrix cur = (g.L[k] * a).plus_scalar(1.0);
    const BlockMatrix via = g.T[k - 1] * prev * g.T[k - 1] * (1.0 / p.xi);
    worst = std::max(worst, rel_distance(cur, via));
  }
  return worst;
}

RankInfo matrix_rank(const Matrix& m, double tol) {
  RankInfo info;
  if (m.size() == 0) return info;
  Eigen::BDCSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  info.sigma_max = s.size() ? s(0) : 0.0;
  info.threshold = tol * info.sigma_max;
  if (info.sigma_max <= tol) {
    info.threshold = tol;
    return info;  // numerically the zero matrix
  }
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > info.threshold) ++info.rank;
    if (s(i) > 0.1 * info.threshold && s(i) < 10.0 * info.threshold) info.ill_conditioned = true;
  }
  return info;
}

Matrix vectorise(const std::vector<BlockMatrix>& elements) {
  if (elements.empty()) return {};
  Matrix m(elements.front().vec_size(), static_cast<Eigen::Index>(elements.size()));
  for (std::size_t j = 0; j < elements.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = elements[j].vec();
  return m;
}

RankInfo rank_of_span(const std::vector<BlockMatrix>& elements, double tol) {
  if (elements.empty()) throw std::invalid_argument("rank_of_span: empty family");
  return matrix_rank(vectorise(elements), tol);
}

Eigen::Index fixed_subspace_dim(const Matrix& phi, double tol) {
  const Matrix shifted = phi - Matrix::Identity(phi.rows(), phi.cols());
  return phi.rows() - matrix_rank(shifted, tol).rank;
}

}  // namespace althecke
