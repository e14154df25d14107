#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace althecke;
using testing::brute_force_tableaux;

namespace {

Multipartition mp(std::vector<Partition> c) { return Multipartition(std::move(c)); }

// The displayed double-sum definition of dominance, written out directly.
bool dominates_oracle(const Multipartition& a, const Multipartition& b) {
  auto partial = [](const Multipartition& m, int k, int j) {
    int s = 0;
    for (int i = 0; i < k; ++i)
      for (int x : m.components[i]) s += x;
    const auto& p = m.components[k];
    for (int r = 0; r < j && r < static_cast<int>(p.size()); ++r) s += p[r];
    return s;
  };
  for (int k = 0; k < a.level(); ++k)
    for (int j = 0; j <= a.size(); ++j)
      if (partial(a, k, j) < partial(b, k, j)) return false;
  return true;
}

// (|lambda^(1)|, lambda^(1), |lambda^(2)|, ...) flattened
std::vector<int> order_key(const Multipartition& m) {
  std::vector<int> key;
  for (const auto& p : m.components) {
    int s = 0;
    for (int x : p) s += x;
    key.push_back(s);
    key.insert(key.end(), p.begin(), p.end());
    key.push_back(-1);
  }
  return key;
}

}  // namespace

TEST_CASE("multipartition enumeration") {
  CHECK(enum_multipartitions(2, 1) == std::vector<Multipartition>{mp({{2}}), mp({{1, 1}})});
  CHECK(enum_multipartitions(2, 2).size() == 5);
  const auto empty = enum_multipartitions(0, 3);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].to_string() == "(-|-|-)");
  CHECK(enum_multipartitions(3, 2).front() == mp({{3}, {}}));
  CHECK(enum_multipartitions(3, 2).back() == mp({{}, {1, 1, 1}}));

  for (int level = 1; level <= 3; ++level)
    for (int n = 0; n <= 6; ++n) {
      const auto all = enum_multipartitions(n, level);
      CHECK(static_cast<long long>(all.size()) == testing::count_multipartitions(n, level));
      for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(order_key(all[i + 1]) < order_key(all[i]));
      for (const auto& m : all) {
        CHECK(m.valid());
        CHECK(m.size() == n);
        CHECK(m.level() == level);
      }
    }
}

TEST_CASE("standard tableaux: pinned examples") {
  const auto l21 = mp({{2, 1}});
  const auto tabs = enum_std_tableaux(l21);
  REQUIRE(tabs.size() == 2);
  CHECK(tabs[0].to_string() == "1,2/3");
  CHECK(tabs[1].to_string() == "1,3/2");
  CHECK(enum_std_tableaux(mp({{4}})).size() == 1);
  CHECK(enum_std_tableaux(mp({{1}, {1}})).size() == 2);
  CHECK(enum_std_tableaux(mp({{3, 2, 1}})).size() == 16);
  CHECK(initial_tableau(l21).to_string() == "1,2/3");
  CHECK(final_tableau(l21).to_string() == "1,3/2");
  const auto l11 = mp({{1}, {1}});
  CHECK(initial_tableau(l11).box(1).comp == 0);
  CHECK(final_tableau(l11).box(1).comp == 1);
  CHECK(enum_std_tableaux(mp({{}})).size() == 1);
}

TEST_CASE("standard tableaux agree with brute force; first is initial, last is final") {
  for (int level = 1; level <= 3; ++level)
    for (int n = 0; n <= (level == 3 ? 4 : 5); ++n) {
      long long sum_sq = 0;
      for (const auto& lam : enum_multipartitions(n, level)) {
        const auto tabs = enum_std_tableaux(lam);
        CHECK(tabs.size() == brute_force_tableaux(lam));
        CHECK(tabs.front() == initial_tableau(lam));
        CHECK(tabs.back() == final_tableau(lam));
        std::set<std::vector<int>> words;
        for (const auto& t : tabs) words.insert(t.reading_word());
        CHECK(words.size() == tabs.size());
        for (std::size_t i = 0; i + 1 < tabs.size(); ++i)
          CHECK(tabs[i].reading_word() < tabs[i + 1].reading_word());
        sum_sq += static_cast<long long>(tabs.size() * tabs.size());
      }
      long long expect = testing::factorial(n);
      for (int i = 0; i < n; ++i) expect *= level;
      CHECK(sum_sq == expect);
    }
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(mp({{2}, {1}})) == mp({{1}, {1, 1}}));
  const auto t = initial_tableau(mp({{2, 1}}));
  CHECK(conjugate(t).to_string() == "1,3/2");
  for (int level = 1; level <= 2; ++level)
    for (int n = 0; n <= 5; ++n)
      for (const auto& lam : enum_multipartitions(n, level)) {
        CHECK(conjugate(conjugate(lam)) == lam);
        CHECK(conjugate(initial_tableau(lam)) == final_tableau(conjugate(lam)));
        for (const auto& s : enum_std_tableaux(lam)) {
          CHECK(conjugate(conjugate(s)) == s);
          if (n >= 2) CHECK_FALSE(conjugate(s) == s);
        }
      }
  // n = 1, odd level: the single box in the middle component is self-conjugate
  const auto mid = initial_tableau(mp({{}, {1}, {}}));
  CHECK(conjugate(mid) == mid);
}

TEST_CASE("dominance: examples and the double-sum oracle") {
  CHECK(dominates(mp({{3}}), mp({{2, 1}})));
  CHECK_FALSE(dominates(mp({{2, 1}}), mp({{3}})));
  const auto tabs = enum_std_tableaux(mp({{2, 1}}));
  CHECK(dominates(tabs[0], tabs[1]));
  CHECK_FALSE(dominates(tabs[1], tabs[0]));
  for (int level = 1; level <= 2; ++level)
    for (int n = 1; n <= 5; ++n) {
      const auto all = enum_multipartitions(n, level);
      for (const auto& a : all)
        for (const auto& b : all) CHECK(dominates(a, b) == dominates_oracle(a, b));
    }
}

TEST_CASE("conjugation reverses dominance (multipartitions and tableaux)") {
  for (int level = 1; level <= 2; ++level)
    for (int n = 1; n <= 5; ++n) {
      const TableauCatalog cat(n, level);
      for (const auto& a : cat.shapes())
        for (const auto& b : cat.shapes()) CHECK(dominates(a, b) == dominates(conjugate(b), conjugate(a)));
      if (n > 4) continue;  // tableau pairs grow quickly; n = 5 runs in the acceptance binary
      const auto refs = cat.all();
      for (const auto s : refs)
        for (const auto t : refs) {
          const auto& ss = cat.at(s);
          const auto& tt = cat.at(t);
          CHECK(dominates(ss, tt) == dominates(conjugate(tt), conjugate(ss)));
        }
    }
}

TEST_CASE("contents, residues and axial distances") {
  const auto t = initial_tableau(mp({{2, 1}}));
  CHECK(content_seq(t, {0}) == std::vector<int>{0, 1, -1});
  const auto p3 = AlgebraParams::root_of_unity(3, {0}, 3);
  CHECK(residue_seq(t, p3) == ResidueSeq{0, 1, 2});
  const auto u = initial_tableau(mp({{1}, {1}}));
  CHECK(content(u, 1, {1, -1}) == 1);
  CHECK(content(u, 2, {1, -1}) == -1);
  CHECK(axial_distance(t, 1, {0}) == -1);
  CHECK(axial_distance(t, 2, {0}) == 2);

  // symmetric kappa: res(t') = -res(t), rho(t') = -rho(t)
  for (const auto& p : testing::desk_instances()) {
    const TableauCatalog cat(p.n, p.level);
    for (const auto r : cat.all()) {
      const auto& s = cat.at(r);
      const auto sc = conjugate(s);
      CHECK(residue_seq(sc, p) == negate(residue_seq(s, p), p));
      for (int k = 1; k < p.n; ++k) CHECK(axial_distance(sc, k, p.kappa) == -axial_distance(s, k, p.kappa));
    }
  }
}

TEST_CASE("transpositions") {
  const auto t = initial_tableau(mp({{2, 1}}));
  REQUIRE(apply_transposition(t, 2));
  CHECK(apply_transposition(t, 2)->to_string() == "1,3/2");
  CHECK_FALSE(apply_transposition(t, 1));
  for (const auto& p : testing::desk_instances()) {
    const TableauCatalog cat(p.n, p.level);
    for (const auto r : cat.all())
      for (int k = 1; k < p.n; ++k) {
        const auto u = apply_transposition(cat.at(r), k);
        if (!u) {
          // adjacent in a row or column: axial distance -1 or 1
          CHECK(std::abs(axial_distance(cat.at(r), k, p.kappa)) == 1);
          continue;
        }
        CHECK(*apply_transposition(*u, k) == cat.at(r));
        CHECK(std::abs(axial_distance(cat.at(r), k, p.kappa)) >= 2);
        CHECK(cat.swap(r, k) == cat.find(*u));
      }
  }
}

TEST_CASE("classes") {
  const auto p3 = AlgebraParams::root_of_unity(1, {0}, 3);
  const auto cls = residue_classes(1, p3);
  REQUIRE(cls.size() == 2);
  CHECK(cls[0].plus == ResidueSeq{0});
  CHECK(cls[0].size() == 1);
  CHECK(cls[1].plus == ResidueSeq{1});
  CHECK(cls[1].minus == ResidueSeq{2});
  CHECK(negate({0, 1, 2}, p3) == ResidueSeq{0, 2, 1});
  const auto p3n = AlgebraParams::root_of_unity(3, {0}, 3);
  CHECK(residue_classes(3, p3n).size() == (27 + 1) / 2);

  const auto shapes = enum_multipartitions(3, 1);
  const auto mc = mp_classes(shapes);
  REQUIRE(mc.size() == 2);
  CHECK(shapes[mc[0].plus] == mp({{3}}));
  CHECK(shapes[mc[0].minus] == mp({{1, 1, 1}}));
  CHECK(mc[1].self_conjugate());
  CHECK(shapes[mc[1].plus] == mp({{2, 1}}));
}

TEST_CASE("one tableau from each conjugate pair") {
  const auto plus = std_plus(mp({{2, 1}}));
  REQUIRE(plus.size() == 1);
  CHECK(plus[0].to_string() == "1,2/3");
  CHECK(std_plus(mp({{2, 2}})).size() == 1);
  CHECK(std_plus(mp({{3, 2, 1}})).size() == 8);
  CHECK_THROWS_AS(std_plus(mp({{3}})), DomainError);
  CHECK(std_plus(mp({{2}, {1, 1}})).size() == 3);
}

TEST_CASE("parsing and catalog lookups") {
  CHECK(parse_multipartition("2,1", 1) == mp({{2, 1}}));
  CHECK(parse_multipartition("2,1|1|", 3) == mp({{2, 1}, {1}, {}}));
  CHECK(parse_multipartition("|1", 2) == mp({{}, {1}}));
  CHECK_THROWS_AS(parse_multipartition("1,2", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_multipartition("2|1", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_multipartition("a", 1), std::invalid_argument);

  const TableauCatalog cat(4, 2);
  for (const auto r : cat.all()) {
    CHECK(cat.find(cat.at(r)) == r);
    CHECK(cat.at(cat.conjugate(r)) == conjugate(cat.at(r)));
    CHECK(cat.conjugate_shape(r.shape) == cat.conjugate(r).shape);
  }
  CHECK_FALSE(cat.find_shape(mp({{4}})));
}

TEST_CASE("residue sequences separate tableaux exactly when the algebra is semisimple") {
  for (int level = 1; level <= 2; ++level)
    for (int n = 1; n <= 5; ++n) {
      const TableauCatalog cat(n, level);
      for (int e : {3, 4, 5, 7, 11}) {
        for (int a = 0; a <= (level == 1 ? 0 : 6); ++a) {
          std::vector<int> kappa = level == 1 ? std::vector<int>{0} : std::vector<int>{a, -a};
          const auto p = AlgebraParams::root_of_unity(n, kappa, e);
          std::set<ResidueSeq> seen;
          bool separated = true;
          for (const auto r : cat.all()) separated = seen.insert(residue_seq(cat.at(r), p)).second && separated;
          CHECK_MESSAGE(separated == semisimple(p), p.describe());
        }
      }
    }
}
