#pragma once

// The alternating subalgebra H^# (fixed points of the hash involution): its
// dimension, a spanning set, and the irreducible H^#-modules obtained by
// restricting or splitting Specht modules.

#include <optional>
#include <string>
#include <vector>

#include "althecke/hash.hpp"

namespace althecke {

/// True when fewer than n entries of kappa have residue 0. Under this
/// hypothesis no occurring residue sequence is fixed by negation.
bool alt_hypothesis(const AlgebraParams& p);

/// Occurring residue sequences i with -i = i.
std::vector<ResidueSeq> self_negative_residues(const TableauCatalog& cat, const AlgebraParams& p);

/// sum over classes {i, -i} of f_{i+} - f_{-i+}. Throws DomainError naming the
/// offending sequences when some occurring class has size one.
BlockMatrix epsilon_element(const RegularRep& rep);

/// {b + b^# : b in the Ariki-Koike basis}.
std::vector<BlockMatrix> alt_spanning_set(const HashMap& h);

struct AltDimension {
  long long expected = 0;          // level^n n! / 2
  Eigen::Index span_rank = 0;      // rank of the spanning set
  Eigen::Index fixed_dim = 0;      // +1 eigenspace of Phi
  bool hypothesis = true;
  bool ill_conditioned = false;

  /// Both routes agree, and match the formula when the hypothesis holds.
  bool ok() const { return span_rank == fixed_dim && (!hypothesis || span_rank == expected); }
};

AltDimension alt_dimension(const RegularRep& rep, const HashMap& h,
                           const std::vector<BlockMatrix>& spanning);

/// Dimension of {X : X M = M X for all M}: stacks M^T (x) 1 - 1 (x) M, compressing
/// with a QR step after each matrix, and counts the null space.
Eigen::Index commutant_dim(const std::vector<Matrix>& mats, double tol);

struct AltIrrep {
  std::string label;          // "[lambda]" or "lambda+" / "lambda-"
  std::size_t shape = 0;      // index of the shape used to realise the module
  int sign = 0;               // 0 for a restricted module, +1 / -1 for a split half
  Eigen::Index dim = 0;
  std::vector<Matrix> matrices;  // one per spanning element
  std::vector<Scalar> traces;
  Eigen::Index commutant = 0;
  double certificate = 0.0;   // intertwiner residual (restricted) or leakage (split)
};

/// S^[lambda]: the lambda block of each spanning element. The certificate is
/// the residual of P M_lambda = M_lambda' P for the permutation t -> t'.
AltIrrep restricted_module(const RegularRep& rep, const std::vector<BlockMatrix>& spanning, std::size_t shape);

/// S^lambda_+ and S^lambda_- for lambda = lambda', in the bases {(f_t +/- f_t') / 2 : t in Std^+}.
/// Certificate = residual of M Q - Q M_restricted (leakage out of the subspace).
std::pair<AltIrrep, AltIrrep> split_modules(const RegularRep& rep, const std::vector<BlockMatrix>& spanning,
                                            std::size_t shape);

struct Classification {
  std::vector<AltIrrep> irreps;
  long long expected = 0;      // level^n n! / 2
  long long sum_squares = 0;   // exact, from tableau counts
  long long sum_squares_matrices = 0;  // from the realised module dimensions
  bool commutants_ok = false;
  bool distinct_ok = false;
  double min_trace_gap = 0.0;
  double certificates = 0.0;   // worst intertwiner / leakage residual
  double orbit = 0.0;          // (F_u T_r + F_u' T_r^#) f_t = alpha_r(t) f_u
  AltDimension dimension;
  /// Action of T_1 T_2 on each irreducible when T_1 T_2 lies in H^# (eigenvalues
  /// when scalar, else trace); empty otherwise.
  std::vector<Scalar> t1t2;
  bool t1t2_scalar = false;

  bool sum_ok() const { return sum_squares == expected && sum_squares_matrices == expected; }
  bool ok(double tol) const {
    return sum_ok() && commutants_ok && distinct_ok && certificates < tol && orbit < tol;
  }
};

/// Full classification; requires n >= 2, symmetric kappa and the alternating system.
Classification classify(const Instance& inst, Exec exec = Exec::parallel);

}  // namespace althecke
