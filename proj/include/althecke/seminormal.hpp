#pragma once

// Seminormal coefficient systems, gamma coefficients, Specht module matrices
// and the semisimplicity criterion.

#include <Eigen/Dense>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "althecke/scalars.hpp"
#include "althecke/tableaux.hpp"

namespace althecke {

using Matrix = Eigen::MatrixXcd;

enum class SystemKind { james, alternating };

std::string to_string(SystemKind kind);

/// James's choice [1 + rho] / [rho]. Requires s_r t standard.
Scalar alpha_james(const StdTableau& t, int r, const AlgebraParams& params);

/// The alternating choice: +/- i sqrt(xi) sqrt([|rho|+1]) sqrt([|rho|-1]) / [|rho|]
/// with sign + exactly when r sits in an earlier (component, row) of t than
/// r+1. The magnitude depends only on |rho| and the sign flips under both
/// s_r and conjugation, which gives the pair product and alpha(t') = -alpha(t).
/// Requires s_r t standard and symmetric kappa.
Scalar alpha_alternating(const StdTableau& t, int r, const AlgebraParams& params);

/// Table alpha_r(t) over every tableau of every shape; zero whenever s_r t is
/// not standard.
class CoefficientSystem {
 public:
  CoefficientSystem(SystemKind kind, const AlgebraParams& params, const TableauCatalog& catalog);

  SystemKind kind() const { return kind_; }
  const AlgebraParams& params() const { return params_; }
  const TableauCatalog& catalog() const { return *catalog_; }

  Scalar alpha(TabRef t, int r) const { return table_[t.shape][t.index][r - 1]; }
  /// Overrides one value (used for fault injection and derived systems).
  void set_alpha(TabRef t, int r, Scalar value) { table_[t.shape][t.index][r - 1] = value; }

  /// The system {-alpha_r(s)}.
  CoefficientSystem negated() const;

 private:
  SystemKind kind_;
  AlgebraParams params_;
  const TableauCatalog* catalog_;
  std::vector<std::vector<std::vector<Scalar>>> table_;
};

struct AxiomReport {
  double commuting = 0.0;    // alpha_k(t) alpha_m(s_k t) = alpha_m(t) alpha_k(s_m t)
  double braid = 0.0;        // the two three-step paths to s_r s_{r+1} s_r t agree
  double pair = 0.0;         // alpha_r(t) alpha_r(v) = [1+rho(t)][1+rho(v)] / ([rho(t)][rho(v)])
  double alternating = 0.0;  // alpha_r(t') = -alpha_r(t); only for kind = alternating
  bool alternating_checked = false;
  std::size_t instances = 0;

  double max() const;
  bool passed(double tol) const { return max() < tol; }
};

/// Exhaustive check of the three coefficient-system axioms (and
/// antisymmetry for alternating systems); relative residuals.
AxiomReport verify_coefficient_axioms(const CoefficientSystem& cs);

class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// gamma_t for every tableau, normalised by gamma = 1 on each initial tableau.
struct GammaTable {
  std::vector<std::vector<Scalar>> values;
  double path_residual = 0.0;  // worst disagreement over all edges t -- s_r t

  Scalar operator()(TabRef t) const { return values[t.shape][t.index]; }
};

/// Propagates gamma_u = gamma_t alpha_r(u) / alpha_r(t) along transpositions
/// from the initial tableau and checks every edge for path independence.
/// Throws InconsistencyError if two paths disagree beyond tolerance and
/// DomainError if a zero alpha blocks the propagation.
GammaTable gamma_table(const CoefficientSystem& cs);

/// Matrices of L_1..L_n and T_1..T_{n-1} on S^lambda in the basis f_t,
/// t in enumeration order. Column j holds the image of basis vector j.
struct SpechtBlock {
  std::size_t shape = 0;
  Multipartition lambda;
  std::vector<Matrix> L;  // L[k-1]
  std::vector<Matrix> T;  // T[r-1]

  std::size_t dim() const { return L.empty() ? 1 : static_cast<std::size_t>(L.front().rows()); }
};

/// Throws DomainError when some [rho_r(t)] needed by the action vanishes.
SpechtBlock specht_block(std::size_t shape, const CoefficientSystem& cs);

/// [1][2]...[n] * prod_{r<s} prod_{-n<d<n} [kappa_r + d - kappa_s].
Scalar ariki_P(const AlgebraParams& params);
/// True iff no factor of ariki_P vanishes (within tolerance).
bool semisimple(const AlgebraParams& params);

}  // namespace althecke
