#pragma once

// The regular representation of a semisimple cyclotomic Hecke algebra as the
// direct sum of its Specht modules, the Ariki-Koike basis, the defining
// relations and numerical rank utilities.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "althecke/block_matrix.hpp"
#include "althecke/seminormal.hpp"

namespace althecke {

/// Kernels come in two flavours: a plain loop kept as the reference and an
/// OpenMP version that must produce bit-identical results.
enum class Exec { serial, parallel };

/// Images of L_1..L_n and T_1..T_{n-1} in some block-diagonal representation.
struct Generators {
  std::vector<BlockMatrix> L;  // L[k-1]
  std::vector<BlockMatrix> T;  // T[r-1]
};

class RegularRep {
 public:
  /// Throws DomainError when the parameters are not semisimple.
  explicit RegularRep(const CoefficientSystem& cs, Exec exec = Exec::parallel);

  const AlgebraParams& params() const { return cs_.params(); }
  const TableauCatalog& catalog() const { return cs_.catalog(); }
  const CoefficientSystem& system() const { return cs_; }

  const std::vector<SpechtBlock>& blocks() const { return blocks_; }
  const Generators& generators() const { return gens_; }
  const BlockMatrix& L(int k) const { return gens_.L[k - 1]; }
  const BlockMatrix& T(int r) const { return gens_.T[r - 1]; }

  const Dims& dims() const { return dims_; }
  /// Sum of the block sizes.
  Eigen::Index total_dim() const;
  /// Sum of squared block sizes (the algebra dimension when faithful).
  Eigen::Index algebra_dim() const;
  BlockMatrix identity() const { return BlockMatrix::identity(dims_); }
  BlockMatrix zero() const { return BlockMatrix::zero(dims_); }

  /// Element supported on one block only.
  BlockMatrix embed(std::size_t shape, const Matrix& m) const;

 private:
  CoefficientSystem cs_;
  std::vector<SpechtBlock> blocks_;
  Generators gens_;
  Dims dims_;
};

/// Everything needed to work with one algebra instance, owned in one place.
struct Instance {
  AlgebraParams params;
  std::unique_ptr<TableauCatalog> catalog;
  std::unique_ptr<CoefficientSystem> system;
  std::unique_ptr<RegularRep> rep;
  GammaTable gamma;

  /// Throws DomainError if not semisimple.
  static std::unique_ptr<Instance> build(const AlgebraParams& params, SystemKind kind,
                                         Exec exec = Exec::parallel);
};

/// Permutations of {0..n-1} in one-line notation.
using Permutation = std::vector<int>;

/// Reduced word for w: bubble sort w into the identity by swapping adjacent
/// descents left to right; recording the swap positions i_1, ..., i_k gives
/// w s_{i_1} ... s_{i_k} = 1, so w = s_{i_k} ... s_{i_1}. Returns (i_k, ..., i_1).
std::vector<int> reduced_word(const Permutation& w);

/// Product of the T images along a word.
BlockMatrix word_product(const Generators& g, const std::vector<int>& word, const Dims& dims);
/// T_w along the bubble-sort reduced word.
BlockMatrix t_word(const Generators& g, const Permutation& w, const Dims& dims);

/// All permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// L_1^{c_1} ... L_n^{c_n} T_w for 0 <= c_i < level and w in S_n; exponent
/// vectors vary slowest (lexicographic), permutations fastest.
std::vector<BlockMatrix> ak_basis(const Generators& g, int level, const Dims& dims,
                                  Exec exec = Exec::parallel);

struct RelationReport {
  double cyclotomic = 0.0;   // prod_l (L_1 - [kappa_l]) = 0
  double quadratic = 0.0;    // (T_r - xi)(T_r + 1) = 0
  double braid = 0.0;        // T_r T_{r+1} T_r = T_{r+1} T_r T_{r+1}
  double t_commute = 0.0;    // T_r T_s = T_s T_r, |r - s| > 1
  double l_commute = 0.0;    // L_k L_m = L_m L_k
  double tl_commute = 0.0;   // T_r L_k = L_k T_r, k != r, r+1
  double mixed = 0.0;        // L_{r+1}(T_r - xi + 1) = T_r L_r + 1
  std::size_t instances = 0;

  double max() const;
  bool passed(double tol) const { return max() < tol; }
  std::vector<std::pair<std::string, double>> families() const;
};

/// Relative residuals of every instance of the defining relations.
RelationReport verify_relations(const Generators& g, const AlgebraParams& params, const Dims& dims);

/// Worst residual of Ltilde_k = xi^{-1} T_{k-1} Ltilde_{k-1} T_{k-1} with
/// Ltilde_k = (xi - 1) L_k + 1; only meaningful when xi != 1 (returns 0 otherwise).
double affine_jm_residual(const Generators& g, const AlgebraParams& params);

struct RankInfo {
  Eigen::Index rank = 0;
  double sigma_max = 0.0;
  double threshold = 0.0;
  /// Singular values within a factor 10 of the cutoff make the decision fragile.
  bool ill_conditioned = false;
};

/// Numerical rank: singular values above tol * sigma_max.
RankInfo matrix_rank(const Matrix& m, double tol);
/// Rank of the vectorised family.
RankInfo rank_of_span(const std::vector<BlockMatrix>& elements, double tol);
/// Columns are the vectorised elements.
Matrix vectorise(const std::vector<BlockMatrix>& elements);
/// Dimension of the +1 eigenspace of phi (assumed diagonalisable, e.g. an involution).
Eigen::Index fixed_subspace_dim(const Matrix& phi, double tol);

}  // namespace althecke
