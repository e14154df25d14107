#include "althecke/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

namespace althecke {

bool approx_eq(Scalar a, Scalar b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

double rel_residual(Scalar a, Scalar b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

Scalar quantum_int(int k, Scalar xi) {
  Scalar sum{0.0, 0.0};
  if (k >= 0) {
    Scalar p{1.0, 0.0};
    for (int i = 0; i < k; ++i) {
      sum += p;
      p *= xi;
    }
    return sum;
  }
  const Scalar inv = 1.0 / xi;
  Scalar p = inv;
  for (int i = -1; i >= k; --i) {
    sum += p;
    p *= inv;
  }
  return -sum;
}

namespace {

void validate_common(int n, const std::vector<int>& kappa, double tol) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (kappa.empty()) throw std::invalid_argument("multicharge must have at least one entry");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

}  // namespace

AlgebraParams AlgebraParams::root_of_unity(int n, std::vector<int> kappa, int e, int j,
                                           double tol) {
  validate_common(n, kappa, tol);
  if (e <= 2) throw std::invalid_argument("quantum characteristic e must exceed 2");
  if (std::gcd(j, e) != 1)
    throw std::invalid_argument("xi = exp(2 pi i j/e) needs gcd(j, e) = 1 to be primitive");
  AlgebraParams p;
  p.n = n;
  p.level = static_cast<int>(kappa.size());
  p.kappa = std::move(kappa);
  p.e = e;
  p.xi_num = ((j % e) + e) % e;
  p.tol = tol;
  const double angle = 2.0 * std::numbers::pi * p.xi_num / e;
  p.xi = std::polar(1.0, angle);
  p.sqrt_xi = std::polar(1.0, angle / 2.0);
  return p;
}

AlgebraParams AlgebraParams::unit(int n, std::vector<int> kappa, double tol) {
  validate_common(n, kappa, tol);
  AlgebraParams p;
  p.n = n;
  p.level = static_cast<int>(kappa.size());
  p.kappa = std::move(kappa);
  p.tol = tol;
  return p;
}

Scalar AlgebraParams::xi_pow(int k) const {
  if (!e) return {1.0, 0.0};
  const long long m = ((static_cast<long long>(xi_num) * k) % *e + *e) % *e;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / *e);
}

Scalar AlgebraParams::qint(int k) const {
  if (!e) return {static_cast<double>(k), 0.0};
  if (residue(k) == 0) return {0.0, 0.0};
  return (xi_pow(k) - 1.0) / (xi - 1.0);
}

int AlgebraParams::residue(int k) const {
  if (!e) return k;
  return ((k % *e) + *e) % *e;
}

int AlgebraParams::neg_residue(int i) const { return residue(-i); }

std::vector<int> AlgebraParams::conjugate_kappa() const {
  std::vector<int> out(kappa.rbegin(), kappa.rend());
  for (auto& k : out) k = -k;
  return out;
}

long long AlgebraParams::algebra_dimension() const {
  constexpr long long cap = std::numeric_limits<long long>::max();
  long long d = 1;
  for (int i = 0; i < n; ++i) {
    if (d > cap / std::max(1, level)) return cap;
    d *= level;
  }
  for (int i = 2; i <= n; ++i) {
    if (d > cap / i) return cap;
    d *= i;
  }
  return d;
}

std::string AlgebraParams::describe() const {
  std::ostringstream os;
  os << "H(n=" << n << ", level=" << level << ", ";
  if (e)
    os << "xi=exp(2pi i*" << xi_num << "/" << *e << "), e=" << *e;
  else
    os << "xi=1, e=inf";
  os << ", kappa=(";
  for (std::size_t i = 0; i < kappa.size(); ++i) os << (i ? "," : "") << kappa[i];
  os << "))";
  return os.str();
}

Scalar sqrt_conventional(int h, const AlgebraParams& params) {
  if (h == 0) throw DomainError("sqrt_conventional: h must be nonzero");
  const Scalar value = params.qint(h);
  if (std::abs(value) <= params.tol)
    throw DomainError("sqrt_conventional: [" + std::to_string(h) + "] vanishes");
  if (h > 0) return std::sqrt(value);
  const Scalar i{0.0, 1.0};
  return i * std::pow(params.sqrt_xi, h) * std::sqrt(params.qint(-h));
}

}  // namespace althecke
