#include "althecke/idempotents.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace althecke {

namespace {

// For each position k: residue -> one content realising it.
std::vector<std::map<int, int>> contents_by_position(const TableauCatalog& cat, const AlgebraParams& p) {
  std::vector<std::map<int, int>> out(p.n);
  for (const TabRef r : cat.all()) {
    const auto c = content_seq(cat.at(r), p.kappa);
    for (int k = 0; k < p.n; ++k) out[k].emplace(p.residue(c[k]), c[k]);
  }
  return out;
}

}  // namespace

BlockMatrix idempotent_F(const RegularRep& rep, TabRef t) {
  const auto& p = rep.params();
  const auto& cat = rep.catalog();
  const auto table = contents_by_position(cat, p);
  const auto ct = content_seq(cat.at(t), p.kappa);
  BlockMatrix out = rep.identity();
  for (int k = 1; k <= p.n; ++k) {
    const int own = p.residue(ct[k - 1]);
    const Scalar mine = p.qint(ct[k - 1]);
    for (const auto& [res, c] : table[k - 1]) {
      if (res == own) continue;
      const Scalar other = p.qint(c);
      out = out * (rep.L(k).plus_scalar(-other) * (1.0 / (mine - other)));
    }
  }
  return out;
}

std::vector<int> path_from_initial(const TableauCatalog& cat, TabRef t) {
  const std::size_t d = cat.dim(t.shape);
  std::vector<int> via(d, 0);
  std::vector<std::size_t> parent(d, 0);
  std::vector<bool> seen(d, false);
  std::deque<std::size_t> q{0};
  seen[0] = true;
  while (!q.empty()) {
    const std::size_t j = q.front();
    q.pop_front();
    if (j == t.index) break;
    for (int r = 1; r < cat.n(); ++r) {
      const auto u = cat.swap({t.shape, j}, r);
      if (!u || seen[u->index]) continue;
      seen[u->index] = true;
      parent[u->index] = j;
      via[u->index] = r;
      q.push_back(u->index);
    }
  }
  std::vector<int> path;
  for (std::size_t j = t.index; j != 0; j = parent[j]) path.push_back(via[j]);
  std::reverse(path.begin(), path.end());
  return path;
}

Matrix f_matrix(const RegularRep& rep, const GammaTable& gamma, TabRef s, TabRef t) {
  if (s.shape != t.shape) throw std::invalid_argument("f_matrix: tableaux of different shapes");
  const auto& p = rep.params();
  const auto& cat = rep.catalog();
  const auto& cs = rep.system();
  const auto& blk = rep.blocks()[s.shape];
  const TabRef init{s.shape, 0};
  Matrix m = gamma(init) * idempotent_F(rep, init).block(s.shape);
  const auto id = Matrix::Identity(m.rows(), m.cols());

  TabRef cur = init;
  for (int r : path_from_initial(cat, s)) {
    const Scalar q = p.qint(axial_distance(cat.at(cur), r, p.kappa));
    m = (blk.T[r - 1] + id * (1.0 / q)) * m / cs.alpha(cur, r);
    cur = *cat.swap(cur, r);
  }
  cur = init;
  for (int r : path_from_initial(cat, t)) {
    const Scalar q = p.qint(axial_distance(cat.at(cur), r, p.kappa));
    m = m * (blk.T[r - 1] + id * (1.0 / q)) / cs.alpha(cur, r);
    cur = *cat.swap(cur, r);
  }
  return m;
}

BlockMatrix f_element(const RegularRep& rep, const GammaTable& gamma, TabRef s, TabRef t) {
  return rep.embed(s.shape, f_matrix(rep, gamma, s, t));
}

BlockMatrix idempotent_F_seminormal(const RegularRep& rep, const GammaTable& gamma, TabRef t) {
  return f_element(rep, gamma, t, t) * (1.0 / gamma(t));
}

std::vector<ResidueSeq> occurring_residues(const TableauCatalog& cat, const AlgebraParams& p) {
  std::set<ResidueSeq> seqs;
  for (const TabRef r : cat.all()) seqs.insert(residue_seq(cat.at(r), p));
  return {seqs.begin(), seqs.end()};
}

BlockMatrix residue_idempotent(const RegularRep& rep, const ResidueSeq& i) {
  BlockMatrix out = rep.zero();
  const auto& cat = rep.catalog();
  for (const TabRef r : cat.all())
    if (residue_seq(cat.at(r), rep.params()) == i) out += idempotent_F(rep, r);
  return out;
}

double IdempotentReport::max() const {
  return std::max({completeness, idempotent, orthogonality, routes, matrix_units, structure,
                   star_transpose, residue_family, gamma_path});
}

IdempotentReport check_idempotents(const RegularRep& rep, const GammaTable& gamma) {
  IdempotentReport out;
  out.gamma_path = gamma.path_residual;
  const auto& cat = rep.catalog();
  const auto refs = cat.all();
  std::vector<BlockMatrix> F(refs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < refs.size(); ++i) F[i] = idempotent_F(rep, refs[i]);

  BlockMatrix sum = rep.zero();
  for (const auto& f : F) sum += f;
  out.completeness = rel_distance(sum, rep.identity());

  for (std::size_t i = 0; i < F.size(); ++i) {
    out.idempotent = std::max(out.idempotent, rel_distance(F[i] * F[i], F[i]));
    for (std::size_t j = 0; j < F.size(); ++j)
      if (i != j) out.orthogonality = std::max(out.orthogonality, (F[i] * F[j]).norm() / std::max(1.0, F[i].norm() * F[j].norm()));
    out.routes = std::max(out.routes, rel_distance(F[i], idempotent_F_seminormal(rep, gamma, refs[i])));
  }

  for (std::size_t s = 0; s < cat.shapes().size(); ++s) {
    const auto d = static_cast<Eigen::Index>(cat.dim(s));
    std::vector<std::vector<Matrix>> f(d, std::vector<Matrix>(d));
    for (Eigen::Index a = 0; a < d; ++a)
      for (Eigen::Index b = 0; b < d; ++b) {
        const TabRef sa{s, static_cast<std::size_t>(a)}, sb{s, static_cast<std::size_t>(b)};
        f[a][b] = f_matrix(rep, gamma, sa, sb);
        Matrix unit = Matrix::Zero(d, d);
        unit(a, b) = gamma(sb);
        out.matrix_units = std::max(out.matrix_units, (f[a][b] - unit).norm() / std::max(1.0, unit.norm()));
      }
    for (Eigen::Index a = 0; a < d; ++a)
      for (Eigen::Index b = 0; b < d; ++b)
        for (Eigen::Index u = 0; u < d; ++u)
          for (Eigen::Index v = 0; v < d; ++v) {
            const Matrix lhs = f[a][b] * f[u][v];
            const Matrix rhs = b == u ? Matrix(gamma({s, static_cast<std::size_t>(b)}) * f[a][v])
                                      : Matrix::Zero(d, d);
            out.structure = std::max(out.structure, (lhs - rhs).norm() / std::max({1.0, lhs.norm(), rhs.norm()}));
          }

    Eigen::VectorXcd g(d);
    for (Eigen::Index a = 0; a < d; ++a) g(a) = gamma({s, static_cast<std::size_t>(a)});
    const auto& blk = rep.blocks()[s];
    auto star = [&](const Matrix& m) {
      const Matrix back = g.cwiseInverse().asDiagonal() * m.transpose() * g.asDiagonal();
      return (m - back).norm() / std::max(1.0, m.norm());
    };
    for (const auto& m : blk.L) out.star_transpose = std::max(out.star_transpose, star(m));
    for (const auto& m : blk.T) out.star_transpose = std::max(out.star_transpose, star(m));
  }

  const auto seqs = occurring_residues(cat, rep.params());
  std::vector<BlockMatrix> fi;
  for (const auto& i : seqs) fi.push_back(residue_idempotent(rep, i));
  BlockMatrix total = rep.zero();
  for (std::size_t a = 0; a < fi.size(); ++a) {
    total += fi[a];
    out.residue_family = std::max(out.residue_family, rel_distance(fi[a] * fi[a], fi[a]));
    for (std::size_t b = a + 1; b < fi.size(); ++b)
      out.residue_family = std::max(out.residue_family, (fi[a] * fi[b]).norm() / std::max(1.0, fi[a].norm() * fi[b].norm()));
  }
  out.residue_family = std::max(out.residue_family, rel_distance(total, rep.identity()));
  return out;
}

}  // namespace althecke
