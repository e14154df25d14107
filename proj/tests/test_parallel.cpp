#include <doctest.h>

#include "support.hpp"

using namespace althecke;

// The OpenMP kernels must reproduce the serial reference exactly.

namespace {

bool identical(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.num_blocks() != b.num_blocks()) return false;
  for (std::size_t i = 0; i < a.num_blocks(); ++i)
    if (a.block(i) != b.block(i)) return false;
  return true;
}

}  // namespace

TEST_CASE("regular representation: serial and parallel builds agree") {
  for (const auto& p : testing::desk_instances()) {
    const auto s = Instance::build(p, SystemKind::alternating, Exec::serial);
    const auto q = Instance::build(p, SystemKind::alternating, Exec::parallel);
    for (int k = 1; k <= p.n; ++k) CHECK(identical(s->rep->L(k), q->rep->L(k)));
    for (int r = 1; r < p.n; ++r) CHECK(identical(s->rep->T(r), q->rep->T(r)));
  }
}

TEST_CASE("Ariki-Koike basis and hash map: serial and parallel agree") {
  for (const auto& p : testing::small_instances()) {
    const auto inst = Instance::build(p, SystemKind::alternating, Exec::serial);
    const auto& rep = *inst->rep;
    const auto a = ak_basis(rep.generators(), p.level, rep.dims(), Exec::serial);
    const auto b = ak_basis(rep.generators(), p.level, rep.dims(), Exec::parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(identical(a[i], b[i]));
    const auto hs = hash_map(rep, Exec::serial);
    const auto hp = hash_map(rep, Exec::parallel);
    CHECK(hs.phi == hp.phi);
  }
}

TEST_CASE("classification: serial and parallel agree") {
  for (const auto& p : testing::small_instances()) {
    const auto inst = Instance::build(p, SystemKind::alternating, Exec::serial);
    const auto s = classify(*inst, Exec::serial);
    const auto q = classify(*inst, Exec::parallel);
    REQUIRE(s.irreps.size() == q.irreps.size());
    for (std::size_t i = 0; i < s.irreps.size(); ++i) {
      CHECK(s.irreps[i].label == q.irreps[i].label);
      CHECK(s.irreps[i].dim == q.irreps[i].dim);
      CHECK(s.irreps[i].traces == q.irreps[i].traces);
      CHECK(s.irreps[i].commutant == q.irreps[i].commutant);
    }
    CHECK(s.certificates == q.certificates);
    CHECK(s.t1t2 == q.t1t2);
  }
}
