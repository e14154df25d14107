#include "althecke/hash.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace althecke {

namespace {

void require_symmetric(const AlgebraParams& p) {
  if (!p.symmetric_kappa())
    throw std::invalid_argument("the hash involution needs a symmetric multicharge, got " + p.describe());
}

std::vector<BlockMatrix> hash_T(const Generators& g, const AlgebraParams& p, const Dims& dims) {
  std::vector<BlockMatrix> out;
  for (const auto& T : g.T) out.push_back(T.inverse(p.tol) * (-p.xi));
  (void)dims;
  return out;
}

// L^# from the closed formula; xi != 1 only
BlockMatrix hash_L_closed(const BlockMatrix& L, const AlgebraParams& p) {
  const Scalar a = p.xi - 1.0;
  const BlockMatrix tilde = (L * a).plus_scalar(1.0);
  return tilde.inverse(p.tol).plus_scalar(-1.0) * (1.0 / a);
}

}  // namespace

Generators hash_generators(const Generators& g, const AlgebraParams& p, const Dims& dims) {
  require_symmetric(p);
  if (p.xi_is_one()) return hash_generators_recursive(g, p, dims);
  Generators h;
  h.T = hash_T(g, p, dims);
  for (const auto& L : g.L) h.L.push_back(hash_L_closed(L, p));
  return h;
}

Generators hash_generators_recursive(const Generators& g, const AlgebraParams& p, const Dims& dims) {
  require_symmetric(p);
  Generators h;
  h.T = hash_T(g, p, dims);
  if (g.L.empty()) return h;
  h.L.push_back(p.xi_is_one() ? -g.L[0] : hash_L_closed(g.L[0], p));
  for (std::size_t k = 1; k < g.L.size(); ++k) {
    const auto& Th = h.T[k - 1];
    h.L.push_back((Th * h.L[k - 1] * Th + Th) * (1.0 / p.xi));
  }
  return h;
}

BlockMatrix HashMap::apply(const BlockMatrix& x) const { return BlockMatrix::unvec(phi * x.vec(), dims); }

BlockMatrix HashMap::apply_coefficients(const Vector& coeffs) const {
  if (static_cast<std::size_t>(coeffs.size()) != hashed_basis.size())
    throw std::invalid_argument("coefficient vector has the wrong length");
  BlockMatrix out = BlockMatrix::zero(dims);
  for (std::size_t i = 0; i < hashed_basis.size(); ++i) out += hashed_basis[i] * coeffs(static_cast<Eigen::Index>(i));
  return out;
}

HashMap hash_map(const RegularRep& rep, Exec exec) {
  const auto& p = rep.params();
  require_symmetric(p);
  HashMap h;
  h.dims = rep.dims();
  const Generators hg = hash_generators(rep.generators(), p, h.dims);
  h.basis = ak_basis(rep.generators(), p.level, h.dims, exec);
  h.hashed_basis = ak_basis(hg, p.level, h.dims, exec);
  const Matrix B = vectorise(h.basis);
  const Matrix Bh = vectorise(h.hashed_basis);
  if (B.rows() != B.cols()) throw DomainError("Ariki-Koike basis is not square in the regular representation");
  h.basis_rank = matrix_rank(B, p.tol).rank;
  if (h.basis_rank != B.cols())
    throw DomainError("Ariki-Koike basis is rank deficient (" + std::to_string(h.basis_rank) + " < " +
                      std::to_string(B.cols()) + ")");
  // Phi B = B^#
  h.phi = B.transpose().partialPivLu().solve(Bh.transpose()).transpose();
  return h;
}

double HashReport::max() const {
  return std::max({relations.max(), double_hash, routes, involution, homomorphism, generators_match, L_eigen,
                   F_hash, e_hash, ftt_hash, fut_hash, altcs, f_products});
}

std::vector<std::pair<std::string, double>> HashReport::families() const {
  return {{"relations", relations.max()}, {"double_hash", double_hash},
          {"routes", routes},             {"involution", involution},
          {"homomorphism", homomorphism}, {"generators_match", generators_match},
          {"L_eigen", L_eigen},           {"F_hash", F_hash},
          {"e_hash", e_hash},             {"ftt_hash", ftt_hash},
          {"fut_hash", fut_hash},         {"altcs", altcs},
          {"f_products", f_products}};
}

HashReport check_hash_calculus(const RegularRep& rep, const GammaTable& gamma, const HashMap& h,
                               std::uint64_t seed, std::size_t random_pairs) {
  const auto& p = rep.params();
  const auto& cat = rep.catalog();
  const auto& cs = rep.system();
  const auto& dims = h.dims;
  HashReport out;

  const Generators hg = hash_generators(rep.generators(), p, dims);
  out.relations = verify_relations(hg, p, dims);
  const Generators hh = hash_generators(hg, p, dims);
  const Generators hr = hash_generators_recursive(rep.generators(), p, dims);
  for (std::size_t r = 0; r < hg.T.size(); ++r) {
    out.double_hash = std::max(out.double_hash, rel_distance(hh.T[r], rep.generators().T[r]));
    out.generators_match = std::max(out.generators_match, rel_distance(h.apply(rep.generators().T[r]), hg.T[r]));
  }
  for (std::size_t k = 0; k < hg.L.size(); ++k) {
    out.double_hash = std::max(out.double_hash, rel_distance(hh.L[k], rep.generators().L[k]));
    out.routes = std::max(out.routes, rel_distance(hr.L[k], hg.L[k]));
    out.generators_match = std::max(out.generators_match, rel_distance(h.apply(rep.generators().L[k]), hg.L[k]));
  }

  const Eigen::Index N = h.phi.rows();
  out.involution = (h.phi * h.phi - Matrix::Identity(N, N)).norm() / std::max(1.0, (h.phi * h.phi).norm());

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  auto random_element = [&] {
    Vector c(static_cast<Eigen::Index>(h.basis.size()));
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = Scalar{gauss(rng), gauss(rng)};
    BlockMatrix x = BlockMatrix::zero(dims);
    for (std::size_t i = 0; i < h.basis.size(); ++i) x += h.basis[i] * c(static_cast<Eigen::Index>(i));
    return x;
  };
  for (std::size_t i = 0; i < random_pairs; ++i) {
    const BlockMatrix x = random_element();
    const BlockMatrix y = random_element();
    out.homomorphism = std::max(out.homomorphism, rel_distance(h.apply(x * y), h.apply(x) * h.apply(y)));
    ++out.random_pairs;
  }

  const auto refs = cat.all();
  std::vector<BlockMatrix> F(refs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < refs.size(); ++i) F[i] = idempotent_F(rep, refs[i]);
  auto F_of = [&](TabRef t) -> const BlockMatrix& {
    const auto it = std::lower_bound(refs.begin(), refs.end(), t);
    return F[static_cast<std::size_t>(it - refs.begin())];
  };

  for (const TabRef s : refs) {
    const TabRef sc = cat.conjugate(s);
    out.F_hash = std::max(out.F_hash, rel_distance(h.apply(F_of(s)), F_of(sc)));
    const BlockMatrix fss = f_element(rep, gamma, s, s);
    const BlockMatrix fscsc = f_element(rep, gamma, sc, sc);
    out.ftt_hash = std::max(out.ftt_hash, rel_distance(h.apply(fss), fscsc * (gamma(s) / gamma(sc))));
    const auto cc = content_seq(cat.at(sc), p.kappa);
    for (int k = 1; k <= p.n; ++k)
      out.L_eigen = std::max(out.L_eigen, rel_distance(hg.L[k - 1] * fss, fss * p.qint(cc[k - 1])));
    for (int r = 1; r < p.n; ++r) {
      const auto u = cat.swap(s, r);
      if (!u) continue;
      const TabRef uc = cat.conjugate(*u);
      const Scalar coeff = -cs.alpha(sc, r) * gamma(s) / (cs.alpha(s, r) * gamma(sc));
      out.fut_hash = std::max(out.fut_hash, rel_distance(h.apply(f_element(rep, gamma, *u, s)),
                                                         f_element(rep, gamma, uc, sc) * coeff));
    }
  }

  for (const auto& i : occurring_residues(cat, p)) {
    out.e_hash = std::max(out.e_hash, rel_distance(h.apply(residue_idempotent(rep, i)),
                                                   residue_idempotent(rep, negate(i, p))));
  }

  // seminormal basis under #, shape by shape; the T_r action on f_st^# only
  // has this shape for alternating systems
  const bool alternating = cs.kind() == SystemKind::alternating;
  out.altcs_checked = alternating;
  for (std::size_t sh = 0; sh < cat.shapes().size(); ++sh) {
    const std::size_t d = cat.dim(sh);
    std::vector<std::vector<BlockMatrix>> fh(d, std::vector<BlockMatrix>(d));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) fh[a][b] = h.apply(f_element(rep, gamma, {sh, a}, {sh, b}));
    for (std::size_t a = 0; a < d; ++a) {
      const TabRef s{sh, a};
      const TabRef sc = cat.conjugate(s);
      for (std::size_t b = 0; b < d; ++b) {
        for (int r = 1; r < p.n && alternating; ++r) {
          const Scalar q = p.qint(axial_distance(cat.at(sc), r, p.kappa));
          BlockMatrix rhs = fh[a][b] * (-1.0 / q);
          if (const auto u = cat.swap(s, r)) rhs += fh[u->index][b] * (-cs.alpha(s, r));
          out.altcs = std::max(out.altcs, rel_distance(rep.T(r) * fh[a][b], rhs));
        }
        for (std::size_t c = 0; c < d; ++c)
          for (std::size_t e = 0; e < d; ++e) {
            const BlockMatrix lhs = fh[a][b] * fh[c][e];
            const BlockMatrix rhs = b == c ? fh[a][e] * gamma({sh, b}) : BlockMatrix::zero(dims);
            out.f_products = std::max(out.f_products, rel_distance(lhs, rhs));
          }
      }
    }
  }
  return out;
}

}  // namespace althecke
