#pragma once

// Primitive idempotents F_t, the seminormal basis elements f_st and the
// residue idempotents f_i.

#include <vector>

#include "althecke/hecke.hpp"

namespace althecke {

/// F_t from the Jucys-Murphy elements: the product over positions k of
/// (L_k - [c]) / ([c_k(t)] - [c]), c running over one content for each residue
/// other than res_k(t) that occurs at position k in some standard tableau of
/// some shape. Computed by matrix products in the regular representation.
BlockMatrix idempotent_F(const RegularRep& rep, TabRef t);

/// f_st on S^lambda via the recursion from f_{t^lambda t^lambda} = gamma F_{t^lambda}:
/// f_{us} = (T_r + 1/[rho_r(s)]) f_st / alpha_r(s) on the left and
/// f_sv = f_st (T_r + 1/[rho_r(t)]) / alpha_r(t) on the right.
/// Returns the block on S^lambda only.
Matrix f_matrix(const RegularRep& rep, const GammaTable& gamma, TabRef s, TabRef t);

/// f_st embedded in the regular representation.
BlockMatrix f_element(const RegularRep& rep, const GammaTable& gamma, TabRef s, TabRef t);

/// (1 / gamma_t) f_tt, the second route to F_t.
BlockMatrix idempotent_F_seminormal(const RegularRep& rep, const GammaTable& gamma, TabRef t);

/// Shortest transposition path t^lambda -> t (r_1 first), by breadth-first search.
std::vector<int> path_from_initial(const TableauCatalog& cat, TabRef t);

/// f_i = sum of F_t over tableaux with residue sequence i (zero if none).
BlockMatrix residue_idempotent(const RegularRep& rep, const ResidueSeq& i);

/// Residue sequences that actually occur, sorted.
std::vector<ResidueSeq> occurring_residues(const TableauCatalog& cat, const AlgebraParams& p);

struct IdempotentReport {
  double completeness = 0.0;     // sum_t F_t = 1
  double idempotent = 0.0;       // F_t^2 = F_t
  double orthogonality = 0.0;    // F_s F_t = 0, s != t
  double routes = 0.0;           // product formula vs (1/gamma_t) f_tt
  double matrix_units = 0.0;     // f_st = gamma_t E_st
  double structure = 0.0;        // f_st f_uv = delta_tu gamma_t f_sv
  double star_transpose = 0.0;   // rho(g) = G^{-1} rho(g)^T G, G = diag(gamma)
  double residue_family = 0.0;   // f_i idempotent, orthogonal, summing to 1
  double gamma_path = 0.0;

  double max() const;
  bool passed(double tol) const { return max() < tol; }
};

IdempotentReport check_idempotents(const RegularRep& rep, const GammaTable& gamma);

}  // namespace althecke
