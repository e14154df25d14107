#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "support.hpp"

using namespace althecke;

namespace {

std::unique_ptr<Instance> build(const AlgebraParams& p) {
  return Instance::build(p, SystemKind::alternating, Exec::serial);
}

bool near(Scalar a, Scalar b, double tol = 1e-10) { return std::abs(a - b) < tol; }

}  // namespace

TEST_CASE("commutant dimension") {
  CHECK(commutant_dim({Matrix::Identity(2, 2)}, 1e-8) == 4);
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1, d(1, 1) = 2;
  CHECK(commutant_dim({d}, 1e-8) == 2);
  Matrix e12 = Matrix::Zero(2, 2);
  e12(0, 1) = 1;
  CHECK(commutant_dim({d, e12}, 1e-8) == 1);
  CHECK(commutant_dim({Matrix::Identity(3, 3), Matrix::Identity(3, 3) * Scalar(2.0)}, 1e-8) == 9);
  CHECK_THROWS_AS(commutant_dim({}, 1e-8), std::invalid_argument);
}

TEST_CASE("dimension of the alternating subalgebra") {
  const std::vector<std::pair<AlgebraParams, long long>> cases = {
      {AlgebraParams::unit(3, {0}), 3},
      {AlgebraParams::root_of_unity(2, {1, -1}, 7), 4},
      {AlgebraParams::root_of_unity(4, {0}, 7), 12},
      {AlgebraParams::unit(2, {0}), 1},
  };
  for (const auto& [p, want] : cases) {
    const auto inst = build(p);
    const auto h = hash_map(*inst->rep, Exec::serial);
    const auto span = alt_spanning_set(h);
    const auto d = alt_dimension(*inst->rep, h, span);
    CHECK(d.expected == want);
    CHECK(d.span_rank == want);
    CHECK(d.fixed_dim == want);
    CHECK(d.hypothesis);
    CHECK(d.ok());
    // b = 1 contributes 1 + 1^# = 2
    CHECK(rel_distance(span.front(), inst->rep->identity() * Scalar(2.0)) < 1e-12);
  }
}

TEST_CASE("n = 2, xi = 1: the spanning set is {2, 0}") {
  const auto inst = build(AlgebraParams::unit(2, {0}));
  const auto span = alt_spanning_set(hash_map(*inst->rep, Exec::serial));
  REQUIRE(span.size() == 2);
  CHECK(span[1].norm() < 1e-12);
}

TEST_CASE("the epsilon element") {
  const auto p = AlgebraParams::root_of_unity(2, {0}, 5);
  const auto inst = build(p);
  const auto& rep = *inst->rep;
  const auto eps = epsilon_element(rep);
  CHECK(rel_distance(eps, residue_idempotent(rep, {0, 1}) - residue_idempotent(rep, {0, 4})) < 1e-12);
  CHECK(rel_distance(eps * eps, rep.identity()) < 1e-10);
  const auto h = hash_map(rep, Exec::serial);
  CHECK(rel_distance(h.apply(eps), -eps) < 1e-10);

  for (const auto& q : testing::desk_instances()) {
    const auto in = build(q);
    CHECK(alt_hypothesis(q));
    CHECK(self_negative_residues(*in->catalog, q).empty());
    const auto e = epsilon_element(*in->rep);
    CHECK(rel_distance(e * e, in->rep->identity()) < 1e-8);
  }
}

TEST_CASE("when the hypothesis fails the formula is not asserted") {
  // n = 1 with kappa_j = 0 for some j: the residue sequence (0) is its own negative
  const auto p = AlgebraParams::root_of_unity(1, {0}, 7);
  CHECK_FALSE(alt_hypothesis(p));
  const auto inst = build(p);
  CHECK(self_negative_residues(*inst->catalog, p) == std::vector<ResidueSeq>{{0}});
  CHECK_THROWS_AS(epsilon_element(*inst->rep), DomainError);
  const auto h = hash_map(*inst->rep, Exec::serial);
  const auto d = alt_dimension(*inst->rep, h, alt_spanning_set(h));
  CHECK_FALSE(d.hypothesis);
  CHECK(d.fixed_dim == 1);
  CHECK(d.ok());

  const auto q = AlgebraParams::root_of_unity(1, {2, 0, -2}, 7);
  CHECK_FALSE(alt_hypothesis(q));
  const auto r = AlgebraParams::root_of_unity(1, {2, -2}, 7);
  CHECK(alt_hypothesis(r));
  CHECK_THROWS_AS(classify(*build(r), Exec::serial), std::invalid_argument);
}

TEST_CASE("restricted and split modules") {
  const auto inst = build(AlgebraParams::root_of_unity(4, {0}, 7));
  const auto& rep = *inst->rep;
  const auto& cat = rep.catalog();
  const auto span = alt_spanning_set(hash_map(rep, Exec::serial));
  const auto m31 = restricted_module(rep, span, *cat.find_shape(Multipartition({{3, 1}})));
  CHECK(m31.dim == 3);
  CHECK(m31.label == "[(3,1)]");
  CHECK(m31.sign == 0);
  CHECK(m31.certificate < 1e-8);
  CHECK(m31.commutant == 1);
  const auto [plus, minus] = split_modules(rep, span, *cat.find_shape(Multipartition({{2, 2}})));
  CHECK(plus.dim == 1);
  CHECK(minus.dim == 1);
  CHECK(plus.certificate < 1e-8);
  CHECK(minus.certificate < 1e-8);
  CHECK(plus.label == "(2,2)+");
  CHECK_THROWS_AS(split_modules(rep, span, *cat.find_shape(Multipartition(std::vector<Partition>{Partition{4}}))), std::invalid_argument);
}

TEST_CASE("classification for n = 3 at xi = 1") {
  const auto inst = build(AlgebraParams::unit(3, {0}));
  const auto c = classify(*inst, Exec::serial);
  REQUIRE(c.irreps.size() == 3);
  for (const auto& ir : c.irreps) CHECK(ir.dim == 1);
  CHECK(c.expected == 3);
  CHECK(c.sum_squares == 3);
  CHECK(c.ok(1e-8));
  REQUIRE(c.t1t2_scalar);
  const Scalar omega{-0.5, std::sqrt(3.0) / 2};
  std::map<std::string, Scalar> by_label;
  for (std::size_t i = 0; i < c.irreps.size(); ++i) by_label[c.irreps[i].label] = c.t1t2[i];
  CHECK(near(by_label.at("[(3)]"), 1.0));
  CHECK(near(by_label.at("(2,1)+"), omega * omega));
  CHECK(near(by_label.at("(2,1)-"), omega));
}

TEST_CASE("classification for n = 4, level 1") {
  const auto inst = build(AlgebraParams::root_of_unity(4, {0}, 7));
  const auto c = classify(*inst, Exec::serial);
  std::multiset<Eigen::Index> dims;
  for (const auto& ir : c.irreps) dims.insert(ir.dim);
  CHECK(dims == std::multiset<Eigen::Index>{1, 1, 1, 3});
  CHECK(c.sum_squares == 12);
  CHECK(c.sum_squares_matrices == 12);
  CHECK(c.ok(1e-8));
}

TEST_CASE("classification over the desk instances") {
  for (const auto& p : testing::desk_instances()) {
    const auto inst = build(p);
    const auto c = classify(*inst, Exec::serial);
    CHECK_MESSAGE(c.ok(p.tol), p.describe());
    CHECK(c.dimension.ok());
    CHECK(c.sum_squares == p.algebra_dimension() / 2);
    for (const auto& ir : c.irreps) CHECK(ir.commutant == 1);
  }
  const auto c = classify(*build(AlgebraParams::root_of_unity(2, {1, -1}, 7)), Exec::serial);
  CHECK(c.sum_squares == 4);
}

TEST_CASE("a non-alternating system does not split") {
  const auto p = AlgebraParams::unit(3, {0});
  const auto inst = Instance::build(p, SystemKind::james, Exec::serial);
  CHECK_THROWS_AS(classify(*inst, Exec::serial), std::invalid_argument);
}
