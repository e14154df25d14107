#include "althecke/alternating.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace althecke {

bool alt_hypothesis(const AlgebraParams& p) {
  const auto zeros = std::count_if(p.kappa.begin(), p.kappa.end(), [&](int k) { return p.residue(k) == 0; });
  return zeros < p.n;
}

std::vector<ResidueSeq> self_negative_residues(const TableauCatalog& cat, const AlgebraParams& p) {
  std::vector<ResidueSeq> out;
  for (const auto& i : occurring_residues(cat, p))
    if (negate(i, p) == i) out.push_back(i);
  return out;
}

BlockMatrix epsilon_element(const RegularRep& rep) {
  const auto& p = rep.params();
  const auto bad = self_negative_residues(rep.catalog(), p);
  if (!bad.empty()) {
    std::ostringstream os;
    os << "epsilon needs every occurring residue class to have size two; fixed by negation:";
    for (const auto& i : bad) {
      os << " (";
      for (std::size_t k = 0; k < i.size(); ++k) os << (k ? "," : "") << i[k];
      os << ")";
    }
    throw DomainError(os.str());
  }
  BlockMatrix eps = rep.zero();
  for (const auto& cls : residue_classes_of(occurring_residues(rep.catalog(), p), p)) {
    eps += residue_idempotent(rep, cls.plus);
    eps -= residue_idempotent(rep, cls.minus);
  }
  return eps;
}

std::vector<BlockMatrix> alt_spanning_set(const HashMap& h) {
  std::vector<BlockMatrix> out;
  out.reserve(h.basis.size());
  for (std::size_t i = 0; i < h.basis.size(); ++i) out.push_back(h.basis[i] + h.hashed_basis[i]);
  return out;
}

AltDimension alt_dimension(const RegularRep& rep, const HashMap& h, const std::vector<BlockMatrix>& spanning) {
  const auto& p = rep.params();
  AltDimension d;
  d.expected = p.algebra_dimension() / 2;
  d.hypothesis = alt_hypothesis(p);
  const RankInfo r = rank_of_span(spanning, p.tol);
  d.span_rank = r.rank;
  d.ill_conditioned = r.ill_conditioned;
  d.fixed_dim = fixed_subspace_dim(h.phi, p.tol);
  return d;
}

Eigen::Index commutant_dim(const std::vector<Matrix>& mats, double tol) {
  if (mats.empty()) throw std::invalid_argument("commutant_dim: no matrices");
  const Eigen::Index d = mats.front().rows();
  const Eigen::Index d2 = d * d;
  Matrix R(0, d2);
  const Matrix id = Matrix::Identity(d, d);
  for (const auto& M : mats) {
    // vec(X M - M X) = (M^T (x) 1 - 1 (x) M) vec(X)
    Matrix A = Matrix::Zero(d2, d2);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        A.block(i * d, j * d, d, d) += M(j, i) * id;
        if (i == j) A.block(i * d, j * d, d, d) -= M;
      }
    Matrix stacked(R.rows() + d2, d2);
    stacked << R, A;
    Eigen::HouseholderQR<Matrix> qr(stacked);
    const Eigen::Index keep = std::min(stacked.rows(), d2);
    R = qr.matrixQR().topRows(keep).triangularView<Eigen::Upper>();
  }
  return d2 - matrix_rank(R, tol).rank;
}

namespace {

double rel_norm(const Matrix& diff, const Matrix& ref) { return diff.norm() / std::max(1.0, ref.norm()); }

std::vector<Scalar> traces_of(const std::vector<Matrix>& mats) {
  std::vector<Scalar> t;
  t.reserve(mats.size());
  for (const auto& m : mats) t.push_back(m.trace());
  return t;
}

Matrix conjugation_permutation(const TableauCatalog& cat, std::size_t shape) {
  const auto d = static_cast<Eigen::Index>(cat.dim(shape));
  Matrix P = Matrix::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const TabRef c = cat.conjugate({shape, static_cast<std::size_t>(j)});
    P(static_cast<Eigen::Index>(c.index), j) = 1.0;
  }
  return P;
}

Matrix split_basis(const TableauCatalog& cat, std::size_t shape, int sign) {
  const auto plus = std_plus(cat.shapes()[shape]);
  const auto d = static_cast<Eigen::Index>(cat.dim(shape));
  Matrix Q = Matrix::Zero(d, static_cast<Eigen::Index>(plus.size()));
  for (std::size_t c = 0; c < plus.size(); ++c) {
    const TabRef t = *cat.find(plus[c]);
    const TabRef tc = cat.conjugate(t);
    Q(static_cast<Eigen::Index>(t.index), static_cast<Eigen::Index>(c)) += 0.5;
    Q(static_cast<Eigen::Index>(tc.index), static_cast<Eigen::Index>(c)) += 0.5 * sign;
  }
  return Q;
}

}  // namespace

AltIrrep restricted_module(const RegularRep& rep, const std::vector<BlockMatrix>& spanning, std::size_t shape) {
  const auto& cat = rep.catalog();
  const std::size_t conj = cat.conjugate_shape(shape);
  AltIrrep ir;
  ir.label = "[" + cat.shapes()[shape].to_string() + "]";
  ir.shape = shape;
  ir.dim = static_cast<Eigen::Index>(cat.dim(shape));
  const Matrix P = conjugation_permutation(cat, shape);
  for (const auto& x : spanning) {
    ir.matrices.push_back(x.block(shape));
    const Matrix& M = ir.matrices.back();
    ir.certificate = std::max(ir.certificate, rel_norm(P * M - x.block(conj) * P, M));
  }
  ir.traces = traces_of(ir.matrices);
  ir.commutant = commutant_dim(ir.matrices, rep.params().tol);
  return ir;
}

std::pair<AltIrrep, AltIrrep> split_modules(const RegularRep& rep, const std::vector<BlockMatrix>& spanning,
                                            std::size_t shape) {
  const auto& cat = rep.catalog();
  if (cat.conjugate_shape(shape) != shape) throw std::invalid_argument("split_modules: shape is not self-conjugate");
  auto half = [&](int sign) {
    AltIrrep ir;
    ir.label = cat.shapes()[shape].to_string() + (sign > 0 ? "+" : "-");
    ir.shape = shape;
    ir.sign = sign;
    const Matrix Q = split_basis(cat, shape, sign);
    const Matrix Qp = Q.completeOrthogonalDecomposition().pseudoInverse();
    ir.dim = Q.cols();
    for (const auto& x : spanning) {
      const Matrix MQ = x.block(shape) * Q;
      ir.matrices.push_back(Qp * MQ);
      ir.certificate = std::max(ir.certificate, rel_norm(MQ - Q * ir.matrices.back(), x.block(shape)));
    }
    ir.traces = traces_of(ir.matrices);
    ir.commutant = commutant_dim(ir.matrices, rep.params().tol);
    return ir;
  };
  return {half(+1), half(-1)};
}

Classification classify(const Instance& inst, Exec exec) {
  const auto& rep = *inst.rep;
  const auto& p = rep.params();
  const auto& cat = rep.catalog();
  if (p.n < 2) throw std::invalid_argument("classification needs n >= 2");
  if (rep.system().kind() != SystemKind::alternating)
    throw std::invalid_argument("classification needs the alternating coefficient system");

  const HashMap h = hash_map(rep, exec);
  const auto spanning = alt_spanning_set(h);
  Classification out;
  out.expected = p.algebra_dimension() / 2;
  out.dimension = alt_dimension(rep, h, spanning);

  const auto classes = mp_classes(cat.shapes());
  std::vector<std::vector<AltIrrep>> per_class(classes.size());
  auto build = [&](std::size_t c) {
    const auto& cls = classes[c];
    if (cls.self_conjugate()) {
      auto [a, b] = split_modules(rep, spanning, cls.plus);
      per_class[c] = {std::move(a), std::move(b)};
    } else {
      per_class[c] = {restricted_module(rep, spanning, cls.plus)};
    }
  };
  if (exec == Exec::parallel) {
    std::vector<std::string> errors(classes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t c = 0; c < classes.size(); ++c) {
      try {
        build(c);
      } catch (const std::exception& e) {
        errors[c] = e.what();
      }
    }
    for (const auto& e : errors)
      if (!e.empty()) throw std::runtime_error(e);
  } else {
    for (std::size_t c = 0; c < classes.size(); ++c) build(c);
  }
  for (auto& v : per_class)
    for (auto& ir : v) out.irreps.push_back(std::move(ir));

  for (const auto& cls : classes) {
    const auto d = static_cast<long long>(cat.dim(cls.plus));
    out.sum_squares += cls.self_conjugate() ? 2 * (d / 2) * (d / 2) : d * d;
  }
  out.commutants_ok = true;
  for (const auto& ir : out.irreps) {
    out.sum_squares_matrices += static_cast<long long>(ir.dim) * ir.dim;
    out.commutants_ok = out.commutants_ok && ir.commutant == 1;
    out.certificates = std::max(out.certificates, ir.certificate);
  }

  out.distinct_ok = true;
  out.min_trace_gap = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < out.irreps.size(); ++a)
    for (std::size_t b = a + 1; b < out.irreps.size(); ++b) {
      double gap = 0.0, scale = 1.0;
      for (std::size_t k = 0; k < spanning.size(); ++k) {
        const Scalar x = out.irreps[a].traces[k], y = out.irreps[b].traces[k];
        gap = std::max(gap, std::abs(x - y));
        scale = std::max({scale, std::abs(x), std::abs(y)});
      }
      gap /= scale;
      out.min_trace_gap = std::min(out.min_trace_gap, gap);
      if (gap <= p.tol) out.distinct_ok = false;
    }
  if (out.irreps.size() < 2) out.min_trace_gap = 0.0;

  // orbit elements F_u T_r + F_u' T_r^# move f_t to alpha_r(t) f_u
  const Generators hg = hash_generators(rep.generators(), p, rep.dims());
  const auto refs = cat.all();
  std::vector<BlockMatrix> F(refs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (std::size_t i = 0; i < refs.size(); ++i) F[i] = idempotent_F(rep, refs[i]);
  auto F_of = [&](TabRef t) -> const BlockMatrix& {
    return F[static_cast<std::size_t>(std::lower_bound(refs.begin(), refs.end(), t) - refs.begin())];
  };
  for (const auto& cls : classes) {
    const std::size_t sh = cls.plus;
    for (std::size_t j = 0; j < cat.dim(sh); ++j) {
      const TabRef t{sh, j};
      for (int r = 1; r < p.n; ++r) {
        const auto u = cat.swap(t, r);
        if (!u) continue;
        const TabRef uc = cat.conjugate(*u);
        if (cls.self_conjugate() && uc == t) continue;
        const BlockMatrix x = F_of(*u) * rep.T(r) + F_of(uc) * hg.T[r - 1];
        Vector want = Vector::Zero(static_cast<Eigen::Index>(cat.dim(sh)));
        want(static_cast<Eigen::Index>(u->index)) = rep.system().alpha(t, r);
        const Vector got = x.block(sh).col(static_cast<Eigen::Index>(j));
        out.orbit = std::max(out.orbit, (got - want).norm() / std::max(1.0, want.norm()));
      }
    }
  }

  if (p.n >= 3) {
    const BlockMatrix x = rep.T(1) * rep.T(2);
    if (rel_distance(h.apply(x), x) < p.tol) {
      out.t1t2_scalar = true;
      for (const auto& ir : out.irreps) {
        Matrix m;
        if (ir.sign == 0) {
          m = x.block(ir.shape);
        } else {
          const Matrix Q = split_basis(cat, ir.shape, ir.sign);
          m = Q.completeOrthogonalDecomposition().pseudoInverse() * x.block(ir.shape) * Q;
        }
        const Scalar tr = m.trace();
        const Scalar lam = tr / static_cast<double>(m.rows());
        const bool scalar = (m - lam * Matrix::Identity(m.rows(), m.cols())).norm() <= p.tol * std::max(1.0, m.norm());
        out.t1t2_scalar = out.t1t2_scalar && scalar;
        out.t1t2.push_back(scalar ? lam : tr);
      }
    }
  }
  return out;
}

}  // namespace althecke
