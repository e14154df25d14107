#include "althecke/block_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace althecke {

BlockMatrix::BlockMatrix(std::vector<Matrix> blocks) : blocks_(std::move(blocks)) {}

BlockMatrix BlockMatrix::zero(const Dims& dims) {
  std::vector<Matrix> b;
  b.reserve(dims.size());
  for (auto d : dims) b.push_back(Matrix::Zero(d, d));
  return BlockMatrix(std::move(b));
}

BlockMatrix BlockMatrix::identity(const Dims& dims) {
  std::vector<Matrix> b;
  b.reserve(dims.size());
  for (auto d : dims) b.push_back(Matrix::Identity(d, d));
  return BlockMatrix(std::move(b));
}

Dims BlockMatrix::dims() const {
  Dims d;
  d.reserve(blocks_.size());
  for (const auto& b : blocks_) d.push_back(b.rows());
  return d;
}

Eigen::Index BlockMatrix::vec_size() const {
  Eigen::Index s = 0;
  for (const auto& b : blocks_) s += b.size();
  return s;
}

Vector BlockMatrix::vec() const {
  Vector v(vec_size());
  Eigen::Index off = 0;
  for (const auto& b : blocks_) {
    v.segment(off, b.size()) = b.reshaped();
    off += b.size();
  }
  return v;
}

BlockMatrix BlockMatrix::unvec(const Vector& v, const Dims& dims) {
  std::vector<Matrix> b;
  b.reserve(dims.size());
  Eigen::Index off = 0;
  for (auto d : dims) {
    b.push_back(v.segment(off, d * d).reshaped(d, d));
    off += d * d;
  }
  if (off != v.size()) throw std::invalid_argument("unvec: length does not match block sizes");
  return BlockMatrix(std::move(b));
}

BlockMatrix BlockMatrix::inverse(double tol) const {
  std::vector<Matrix> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    Eigen::FullPivLU<Matrix> lu(b);
    lu.setThreshold(tol);
    if (!lu.isInvertible()) throw DomainError("block matrix is numerically singular");
    out.push_back(lu.inverse());
  }
  return BlockMatrix(std::move(out));
}

double BlockMatrix::norm() const {
  double s = 0.0;
  for (const auto& b : blocks_) s += b.squaredNorm();
  return std::sqrt(s);
}

namespace {
void check_shape(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.num_blocks() != b.num_blocks()) throw std::invalid_argument("block structure mismatch");
}
}  // namespace

BlockMatrix& BlockMatrix::operator+=(const BlockMatrix& o) {
  check_shape(*this, o);
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] += o.blocks_[i];
  return *this;
}

BlockMatrix& BlockMatrix::operator-=(const BlockMatrix& o) {
  check_shape(*this, o);
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] -= o.blocks_[i];
  return *this;
}

BlockMatrix& BlockMatrix::operator*=(Scalar c) {
  for (auto& b : blocks_) b *= c;
  return *this;
}

BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
  check_shape(a, b);
  std::vector<Matrix> out;
  out.reserve(a.num_blocks());
  for (std::size_t i = 0; i < a.num_blocks(); ++i) out.push_back(a.block(i) * b.block(i));
  return BlockMatrix(std::move(out));
}

BlockMatrix BlockMatrix::plus_scalar(Scalar c) const {
  BlockMatrix out = *this;
  for (auto& b : out.blocks_) b.diagonal().array() += c;
  return out;
}

double rel_distance(const BlockMatrix& a, const BlockMatrix& b) {
  return (a - b).norm() / std::max({1.0, a.norm(), b.norm()});
}

}  // namespace althecke
