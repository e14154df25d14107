#pragma once

// Scalar field arithmetic shared by every other module: complex doubles,
// quantum integers and the fixed square-root branch conventions.

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace althecke {

using Scalar = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-8;

/// Raised when a construction needs a nonzero quantity that vanishes at the
/// chosen parameters (non-semisimple specialisation, [h] = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Mixed absolute/relative comparison: |a - b| <= tol * max(1, |a|, |b|).
bool approx_eq(Scalar a, Scalar b, double tol);

/// Relative residual matching approx_eq: |a - b| / max(1, |a|, |b|).
double rel_residual(Scalar a, Scalar b);

/// [k]_xi = 1 + xi + ... + xi^{k-1} for k >= 0 and
/// -(xi^{-1} + ... + xi^{k}) for k < 0.
Scalar quantum_int(int k, Scalar xi);

/// One cyclotomic Hecke algebra instance H_{n,l}(C, xi, kappa).
///
/// xi is either 1 (quantum characteristic infinity) or exp(2 pi i j / e)
/// with gcd(j, e) = 1, so e is exactly the multiplicative order of xi.
struct AlgebraParams {
  int n = 1;
  int level = 1;
  std::optional<int> e;  // nullopt: infinite quantum characteristic (xi = 1)
  int xi_num = 0;        // j in xi = exp(2 pi i j / e); 0 when xi = 1
  Scalar xi{1.0, 0.0};
  Scalar sqrt_xi{1.0, 0.0};  // exp(pi i j / e)
  std::vector<int> kappa{0};
  double tol = kDefaultTolerance;

  /// xi = exp(2 pi i j / e). Throws std::invalid_argument on bad input.
  static AlgebraParams root_of_unity(int n, std::vector<int> kappa, int e, int j = 1,
                                     double tol = kDefaultTolerance);
  /// xi = 1, e = infinity.
  static AlgebraParams unit(int n, std::vector<int> kappa, double tol = kDefaultTolerance);

  bool xi_is_one() const { return !e.has_value(); }

  /// [k]_xi for this instance.
  Scalar qint(int k) const;
  /// xi^k, exact on the unit circle.
  Scalar xi_pow(int k) const;
  /// Residue of an integer content: k mod e, or k itself when e is infinite.
  int residue(int k) const;
  /// -i mod e for a residue i (negation in I = Z/eZ).
  int neg_residue(int i) const;

  /// kappa' = (-kappa_l, ..., -kappa_1).
  std::vector<int> conjugate_kappa() const;
  bool symmetric_kappa() const { return conjugate_kappa() == kappa; }

  /// ell^n n!; saturates at the int64 maximum.
  long long algebra_dimension() const;

  std::string describe() const;
};

/// Fixed square root of [h]_xi for 1 <= |h|.
///
/// h > 0: the principal complex square root. h < 0: sqrt(-1) * sqrt(xi)^{h} *
/// sqrt([-h]) (with sqrt(-1) = +i and sqrt(xi) = exp(pi i j / e)), which squares
/// to [h] because [h] = -xi^{h} [-h]. Throws DomainError if [h] ~ 0.
Scalar sqrt_conventional(int h, const AlgebraParams& params);

}  // namespace althecke
