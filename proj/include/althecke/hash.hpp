#pragma once

// The hash involution T_r -> -xi T_r^{-1}, Ltilde_1 -> Ltilde_1^{-1} on the
// regular representation, as generator images and as a linear map on the
// whole algebra, plus the identities it satisfies on idempotents and the
// seminormal basis.

#include <cstdint>

#include "althecke/hecke.hpp"
#include "althecke/idempotents.hpp"

namespace althecke {

/// Hash of generator images: T^# = -xi T^{-1}; for xi != 1
/// L_k^# = (Ltilde_k^{-1} - 1) / (xi - 1) with Ltilde_k = (xi - 1) L_k + 1, and for
/// xi = 1 the recursion below. Requires symmetric kappa.
Generators hash_generators(const Generators& g, const AlgebraParams& p, const Dims& dims);

/// The second route: L_1^# from the closed formula (or -L_1 when xi = 1), then
/// L_{k+1}^# = xi^{-1} (T_k^# L_k^# T_k^# + T_k^#).
Generators hash_generators_recursive(const Generators& g, const AlgebraParams& p, const Dims& dims);

/// # as a matrix on vec-coordinates: Phi = B^# B^{-1}, B the vectorised
/// Ariki-Koike basis and B^# the same words in the hashed generators.
struct HashMap {
  Dims dims;
  Matrix phi;
  std::vector<BlockMatrix> basis;         // Ariki-Koike basis
  std::vector<BlockMatrix> hashed_basis;  // b^# for each basis element
  Eigen::Index basis_rank = 0;

  BlockMatrix apply(const BlockMatrix& x) const;
  /// sum_i c_i b_i^#, for x given by its coordinates in the basis.
  BlockMatrix apply_coefficients(const Vector& coeffs) const;
};

/// Throws std::invalid_argument for non-symmetric kappa and DomainError if the
/// Ariki-Koike basis is rank deficient.
HashMap hash_map(const RegularRep& rep, Exec exec = Exec::parallel);

struct HashReport {
  RelationReport relations;     // on the hashed generator images
  double double_hash = 0.0;     // (g^#)^# = g on generators
  double routes = 0.0;          // closed formula vs recursion for L_k^#
  double involution = 0.0;      // Phi^2 = 1
  double homomorphism = 0.0;    // (xy)^# = x^# y^# on random pairs
  double generators_match = 0.0;  // Phi applied to each generator = hashed image
  double L_eigen = 0.0;         // L_k^# f_ss = [c_k(s')] f_ss
  double F_hash = 0.0;          // F_t^# = F_{t'}
  double e_hash = 0.0;          // f_i^# = f_{-i}
  double ftt_hash = 0.0;        // f_ss^# = (gamma_s / gamma_s') f_{s's'}
  double fut_hash = 0.0;        // f_us^# = -alpha_r(s') gamma_s / (alpha_r(s) gamma_s') f_{u's'}
  double altcs = 0.0;           // T_r f_st^# = -alpha_r(s) f_ut^# - f_st^# / [rho_r(s')]
  double f_products = 0.0;      // f_st^# f_uv^# = delta_tu gamma_t f_sv^#
  bool altcs_checked = false;   // only for alternating systems
  std::size_t random_pairs = 0;

  double max() const;
  bool passed(double tol) const { return max() < tol; }
  std::vector<std::pair<std::string, double>> families() const;
};

HashReport check_hash_calculus(const RegularRep& rep, const GammaTable& gamma, const HashMap& h,
                               std::uint64_t seed = 20240611, std::size_t random_pairs = 8);

}  // namespace althecke
