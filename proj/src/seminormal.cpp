#include "althecke/seminormal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace althecke {

std::string to_string(SystemKind kind) {
  return kind == SystemKind::james ? "james" : "alternating";
}

namespace {

int rho(const StdTableau& t, int r, const AlgebraParams& p) { return axial_distance(t, r, p.kappa); }

void require_swap(const StdTableau& t, int r) {
  if (r < 1 || r >= t.n()) throw std::out_of_range("transposition index out of range");
  if (!apply_transposition(t, r)) throw DomainError("s_r t is not standard");
}

}  // namespace

Scalar alpha_james(const StdTableau& t, int r, const AlgebraParams& params) {
  require_swap(t, r);
  const int h = rho(t, r, params);
  const Scalar den = params.qint(h);
  if (std::abs(den) <= params.tol) throw DomainError("[rho] vanishes");
  return params.qint(1 + h) / den;
}

Scalar alpha_alternating(const StdTableau& t, int r, const AlgebraParams& params) {
  require_swap(t, r);
  const int h = std::abs(rho(t, r, params));
  const Scalar den = params.qint(h);
  if (std::abs(den) <= params.tol) throw DomainError("[rho] vanishes");
  const Box& a = t.box(r);
  const Box& b = t.box(r + 1);
  const bool earlier = a.comp != b.comp ? a.comp < b.comp : a.row < b.row;
  const Scalar i{0.0, 1.0};
  // principal roots of [h+1], [h-1]; [h-1] may be 0 (then alpha = 0)
  Scalar mag = i * params.sqrt_xi * std::sqrt(params.qint(h + 1)) * std::sqrt(params.qint(h - 1)) / den;
  return earlier ? mag : -mag;
}

CoefficientSystem::CoefficientSystem(SystemKind kind, const AlgebraParams& params,
                                     const TableauCatalog& catalog)
    : kind_(kind), params_(params), catalog_(&catalog) {
  if (catalog.n() != params.n || catalog.level() != params.level)
    throw std::invalid_argument("catalog does not match the algebra parameters");
  if (kind == SystemKind::alternating && !params.symmetric_kappa())
    throw std::invalid_argument("alternating coefficient systems need a symmetric multicharge");
  const int n = params.n;
  table_.resize(catalog.shapes().size());
  for (std::size_t s = 0; s < table_.size(); ++s) {
    table_[s].assign(catalog.dim(s), std::vector<Scalar>(std::max(0, n - 1), Scalar{}));
    for (std::size_t j = 0; j < catalog.dim(s); ++j) {
      const StdTableau& t = catalog.at({s, j});
      for (int r = 1; r < n; ++r) {
        if (!catalog.swap({s, j}, r)) continue;
        table_[s][j][r - 1] = kind == SystemKind::james ? alpha_james(t, r, params)
                                                        : alpha_alternating(t, r, params);
      }
    }
  }
}

CoefficientSystem CoefficientSystem::negated() const {
  CoefficientSystem out = *this;
  for (auto& shape : out.table_)
    for (auto& row : shape)
      for (auto& a : row) a = -a;
  return out;
}

double AxiomReport::max() const { return std::max({commuting, braid, pair, alternating}); }

namespace {

// alpha along the path t -> s_{r1} t -> s_{r2} s_{r1} t ..., zero once a
// step leaves the standard tableaux.
Scalar path_product(const CoefficientSystem& cs, TabRef t, std::initializer_list<int> steps) {
  Scalar prod{1.0, 0.0};
  std::optional<TabRef> cur = t;
  for (int r : steps) {
    prod *= cs.alpha(*cur, r);
    cur = cs.catalog().swap(*cur, r);
    if (!cur) return Scalar{};
  }
  return prod;
}

}  // namespace

AxiomReport verify_coefficient_axioms(const CoefficientSystem& cs) {
  AxiomReport rep;
  const auto& cat = cs.catalog();
  const auto& p = cs.params();
  const int n = p.n;
  rep.alternating_checked = cs.kind() == SystemKind::alternating;
  for (const TabRef t : cat.all()) {
    const StdTableau& tab = cat.at(t);
    for (int k = 1; k < n; ++k) {
      for (int m = k + 2; m < n; ++m) {
        rep.commuting = std::max(rep.commuting, rel_residual(path_product(cs, t, {k, m}),
                                                             path_product(cs, t, {m, k})));
        ++rep.instances;
      }
    }
    for (int r = 1; r + 1 < n; ++r) {
      rep.braid = std::max(rep.braid, rel_residual(path_product(cs, t, {r, r + 1, r}),
                                                   path_product(cs, t, {r + 1, r, r + 1})));
      ++rep.instances;
    }
    for (int r = 1; r < n; ++r) {
      const auto v = cat.swap(t, r);
      if (!v) continue;
      const int ht = axial_distance(tab, r, p.kappa);
      const int hv = -ht;
      const Scalar want = p.qint(1 + ht) * p.qint(1 + hv) / (p.qint(ht) * p.qint(hv));
      rep.pair = std::max(rep.pair, rel_residual(cs.alpha(t, r) * cs.alpha(*v, r), want));
      ++rep.instances;
      if (rep.alternating_checked)
        rep.alternating =
            std::max(rep.alternating, rel_residual(cs.alpha(cat.conjugate(t), r), -cs.alpha(t, r)));
    }
  }
  return rep;
}

GammaTable gamma_table(const CoefficientSystem& cs) {
  const auto& cat = cs.catalog();
  const int n = cs.params().n;
  const double tol = cs.params().tol;
  GammaTable g;
  g.values.resize(cat.shapes().size());
  for (std::size_t s = 0; s < g.values.size(); ++s) {
    const std::size_t d = cat.dim(s);
    g.values[s].assign(d, Scalar{});
    std::vector<bool> seen(d, false);
    std::deque<std::size_t> queue{0};
    g.values[s][0] = 1.0;
    seen[0] = true;
    while (!queue.empty()) {
      const std::size_t j = queue.front();
      queue.pop_front();
      const TabRef t{s, j};
      for (int r = 1; r < n; ++r) {
        const auto u = cat.swap(t, r);
        if (!u) continue;
        const Scalar at = cs.alpha(t, r);
        const Scalar au = cs.alpha(*u, r);
        if (!seen[u->index]) {
          if (std::abs(at) <= tol)
            throw DomainError("gamma propagation blocked by a vanishing alpha at " +
                              cat.at(t).to_string());
          g.values[s][u->index] = g.values[s][j] * au / at;
          seen[u->index] = true;
          queue.push_back(u->index);
        }
        // gamma_u alpha_r(t) = gamma_t alpha_r(u) on every edge
        const double res = rel_residual(g.values[s][u->index] * at, g.values[s][j] * au);
        g.path_residual = std::max(g.path_residual, res);
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      throw InconsistencyError("tableaux of " + cat.shapes()[s].to_string() +
                               " not connected by transpositions");
  }
  if (g.path_residual > tol)
    throw InconsistencyError("gamma coefficients depend on the path (residual " +
                             std::to_string(g.path_residual) + ")");
  return g;
}

SpechtBlock specht_block(std::size_t shape, const CoefficientSystem& cs) {
  const auto& cat = cs.catalog();
  const auto& p = cs.params();
  const int n = p.n;
  const auto d = static_cast<Eigen::Index>(cat.dim(shape));
  SpechtBlock blk;
  blk.shape = shape;
  blk.lambda = cat.shapes()[shape];
  blk.L.assign(n, Matrix::Zero(d, d));
  blk.T.assign(std::max(0, n - 1), Matrix::Zero(d, d));
  for (Eigen::Index j = 0; j < d; ++j) {
    const TabRef t{shape, static_cast<std::size_t>(j)};
    const StdTableau& tab = cat.at(t);
    for (int k = 1; k <= n; ++k) blk.L[k - 1](j, j) = p.qint(content(tab, k, p.kappa));
    for (int r = 1; r < n; ++r) {
      const Scalar q = p.qint(axial_distance(tab, r, p.kappa));
      if (std::abs(q) <= p.tol)
        throw DomainError("[rho_" + std::to_string(r) + "] vanishes at " + tab.to_string());
      blk.T[r - 1](j, j) = -1.0 / q;
      if (const auto u = cat.swap(t, r))
        blk.T[r - 1](static_cast<Eigen::Index>(u->index), j) = cs.alpha(t, r);
    }
  }
  return blk;
}

namespace {

template <class F>
void for_each_ariki_factor(const AlgebraParams& p, F&& f) {
  for (int k = 1; k <= p.n; ++k) f(p.qint(k));
  for (int r = 0; r < p.level; ++r)
    for (int s = r + 1; s < p.level; ++s)
      for (int d = -p.n + 1; d < p.n; ++d) f(p.qint(p.kappa[r] + d - p.kappa[s]));
}

}  // namespace

Scalar ariki_P(const AlgebraParams& params) {
  Scalar prod{1.0, 0.0};
  for_each_ariki_factor(params, [&](Scalar x) { prod *= x; });
  return prod;
}

bool semisimple(const AlgebraParams& params) {
  bool ok = true;
  for_each_ariki_factor(params, [&](Scalar x) { ok = ok && std::abs(x) > params.tol; });
  return ok;
}

}  // namespace althecke
