#pragma once

// Block-diagonal complex matrices: elements of the algebra realised inside
// End(S^lambda_1) x ... x End(S^lambda_m). Only the diagonal blocks are stored.

#include <Eigen/Dense>
#include <vector>

#include "althecke/scalars.hpp"

namespace althecke {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Dims = std::vector<Eigen::Index>;

class BlockMatrix {
 public:
  BlockMatrix() = default;
  explicit BlockMatrix(std::vector<Matrix> blocks);

  static BlockMatrix zero(const Dims& dims);
  static BlockMatrix identity(const Dims& dims);

  std::size_t num_blocks() const { return blocks_.size(); }
  Matrix& block(std::size_t i) { return blocks_[i]; }
  const Matrix& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  Dims dims() const;

  /// sum of squared block sizes = length of vec()
  Eigen::Index vec_size() const;
  /// Blocks flattened column-major, one after the other.
  Vector vec() const;
  static BlockMatrix unvec(const Vector& v, const Dims& dims);

  /// Throws DomainError if some block is numerically singular.
  BlockMatrix inverse(double tol = kDefaultTolerance) const;

  double norm() const;  // Frobenius

  BlockMatrix& operator+=(const BlockMatrix& o);
  BlockMatrix& operator-=(const BlockMatrix& o);
  BlockMatrix& operator*=(Scalar c);

  friend BlockMatrix operator+(BlockMatrix a, const BlockMatrix& b) { return a += b; }
  friend BlockMatrix operator-(BlockMatrix a, const BlockMatrix& b) { return a -= b; }
  friend BlockMatrix operator*(BlockMatrix a, Scalar c) { return a *= c; }
  friend BlockMatrix operator*(Scalar c, BlockMatrix a) { return a *= c; }
  friend BlockMatrix operator-(BlockMatrix a) { return a *= Scalar{-1.0, 0.0}; }
  friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b);

  /// a + c * 1
  BlockMatrix plus_scalar(Scalar c) const;

 private:
  std::vector<Matrix> blocks_;
};

/// ||a - b|| / max(1, ||a||, ||b||), Frobenius norms.
double rel_distance(const BlockMatrix& a, const BlockMatrix& b);

}  // namespace althecke
