#include "doctest.h"

#include "bimorph/finset.hpp"

using namespace bimorph;

TEST_SUITE("finset") {

TEST_CASE("labels are metadata only") {
  FinSet a(2, {"x", "y"});
  FinSet b(2);
  CHECK(a == b);
  CHECK(a.label(1) == "y");
  CHECK(b.label(1) == "e1");  // positional fallback
  CHECK_THROWS_AS(FinSet(2, {"x"}), ValidationError);
  CHECK_THROWS_AS(FinSet(2, {"x", "x"}), ValidationError);
}

TEST_CASE("composition and identity") {
  FinSet a(3), b(2), c(2);
  FinMap f(a, b, {0, 1, 1});
  FinMap g(b, c, {1, 0});
  FinMap gf = compose(g, f);
  CHECK(gf.table == std::vector<std::uint32_t>{1, 0, 0});
  CHECK(compose(f, FinMap::identity(a)) == f);
  CHECK(compose(FinMap::identity(b), f) == f);
  CHECK_THROWS_AS(compose(f, g), DomainMismatch);
  CHECK_THROWS_AS(FinMap(a, b, {0, 2, 1}), ValidationError);
}

TEST_CASE("inverse") {
  FinSet a(3);
  FinMap p(a, a, {2, 0, 1});
  CHECK(p.is_bijective());
  CHECK(compose(p.inverse(), p) == FinMap::identity(a));
  FinMap q(a, a, {0, 0, 1});
  CHECK_FALSE(q.is_bijective());
  CHECK_THROWS_AS(q.inverse(), NotInvertible);
}

TEST_CASE("product indexing is a-major") {
  ProductSet p = product(FinSet(3), FinSet(2));
  CHECK(p.carrier.size == 6);
  CHECK(p.pair_index(2, 1) == 5);
  CHECK(p.unpair(3) == std::pair<std::uint32_t, std::uint32_t>{1, 1});
  for (std::uint32_t i = 0; i < 6; ++i) {
    auto [x, y] = p.unpair(i);
    CHECK(p.proj1()(i) == x);
    CHECK(p.proj2()(i) == y);
    CHECK(p.pair_index(x, y) == i);
  }
}

TEST_CASE("pairing mediates") {
  FinSet x(2), a(2), b(3);
  ProductSet p = product(a, b);
  FinMap f(x, a, {1, 0});
  FinMap g(x, b, {2, 2});
  FinMap m = p.pairing(f, g);
  CHECK(compose(p.proj1(), m) == f);
  CHECK(compose(p.proj2(), m) == g);
}

TEST_CASE("coproduct injections and copairing") {
  FinSet a(2), b(3), x(2);
  CoproductSet c = coproduct(a, b);
  CHECK(c.carrier.size == 5);
  CHECK(c.inj1()(1) == 1);
  CHECK(c.inj2()(0) == 2);  // A-block first
  FinMap f(a, x, {0, 1});
  FinMap g(b, x, {1, 1, 0});
  FinMap h = c.copair(f, g);
  CHECK(compose(h, c.inj1()) == f);
  CHECK(compose(h, c.inj2()) == g);
}

TEST_CASE("all_maps is exhaustive and ordered") {
  auto maps = all_maps(FinSet(2), FinSet(3));
  CHECK(maps.size() == 9);
  CHECK(maps.front().table == std::vector<std::uint32_t>{0, 0});
  CHECK(maps.back().table == std::vector<std::uint32_t>{2, 2});
  for (std::size_t i = 1; i < maps.size(); ++i) {
    CHECK(maps[i - 1].table < maps[i].table);
  }
  // empty domain: exactly one map
  CHECK(all_maps(FinSet(0), FinSet(3)).size() == 1);
  // empty codomain with nonempty domain: none representable
  CHECK(all_maps(FinSet(0), FinSet(0)).size() == 1);
}

TEST_CASE("budget guards enumeration") {
  std::size_t old = enumeration_budget();
  set_enumeration_budget(100);
  CHECK_THROWS_AS(all_maps(FinSet(8), FinSet(4)), SizeBudgetExceeded);
  CHECK_THROWS_AS(checked_pow(10, 10), SizeBudgetExceeded);
  CHECK(checked_pow(2, 6) == 64);
  set_enumeration_budget(old);
}

TEST_CASE("tuple morphisms") {
  Obj a({FinSet(2), FinSet(1)});
  Obj b({FinSet(2), FinSet(2)});
  auto ms = all_mors(a, b);
  CHECK(ms.size() == 4 * 2);
  Mor id = Mor::identity(a);
  CHECK(compose(ms[0], id) == ms[0]);
}

}  // TEST_SUITE
