#include "bimorph/fixtures.hpp"

#include <array>

namespace bimorph {
namespace fixtures {

namespace {

std::vector<std::uint32_t> table_from(
    std::uint32_t n, std::uint32_t (*f)(std::uint32_t, std::uint32_t)) {
  std::vector<std::uint32_t> t(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      t[a * n + b] = f(a, b);
    }
  }
  return t;
}

}  // namespace

FiniteSemiring boolean_semiring() {
  FiniteSemiring s{"bool",
                   FinSet(2, {"0", "1"}),
                   table_from(2, [](std::uint32_t a, std::uint32_t b) {
                     return a | b;
                   }),
                   table_from(2, [](std::uint32_t a, std::uint32_t b) {
                     return a & b;
                   }),
                   0,
                   1};
  s.validate();
  return s;
}

FiniteSemiring f2() {
  FiniteSemiring s{"f2",
                   FinSet(2, {"0", "1"}),
                   table_from(2, [](std::uint32_t a, std::uint32_t b) {
                     return a ^ b;
                   }),
                   table_from(2, [](std::uint32_t a, std::uint32_t b) {
                     return a & b;
                   }),
                   0,
                   1};
  s.validate();
  return s;
}

FiniteSemiring z4() {
  FiniteSemiring s{"z4",
                   FinSet(4, {"0", "1", "2", "3"}),
                   table_from(4, [](std::uint32_t a, std::uint32_t b) {
                     return (a + b) % 4;
                   }),
                   table_from(4, [](std::uint32_t a, std::uint32_t b) {
                     return (a * b) % 4;
                   }),
                   0,
                   1};
  s.validate();
  return s;
}

FiniteSemiring bool_triangular() {
  // element = bit 0: top-left, bit 1: top-right, bit 2: bottom-right
  auto a_of = [](std::uint32_t m) { return m & 1u; };
  auto b_of = [](std::uint32_t m) { return (m >> 1) & 1u; };
  auto d_of = [](std::uint32_t m) { return (m >> 2) & 1u; };
  auto enc = [](std::uint32_t a, std::uint32_t b, std::uint32_t d) {
    return a | (b << 1) | (d << 2);
  };
  std::vector<std::string> labels;
  for (std::uint32_t m = 0; m < 8; ++m) {
    labels.push_back("[" + std::to_string(a_of(m)) + std::to_string(b_of(m)) +
                     ";" + std::to_string(d_of(m)) + "]");
  }
  std::vector<std::uint32_t> add(64);
  std::vector<std::uint32_t> mul(64);
  for (std::uint32_t m = 0; m < 8; ++m) {
    for (std::uint32_t k = 0; k < 8; ++k) {
      add[m * 8 + k] = m | k;  // entrywise or
      mul[m * 8 + k] =
          enc(a_of(m) & a_of(k),
              (a_of(m) & b_of(k)) | (b_of(m) & d_of(k)),
              d_of(m) & d_of(k));
    }
  }
  FiniteSemiring s{"booltri", FinSet(8, std::move(labels)), std::move(add),
                   std::move(mul), 0, enc(1, 0, 1)};
  s.validate();
  return s;
}

namespace {

FiniteMonoid cyclic(std::uint32_t n, const std::string& name) {
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
  }
  std::vector<std::uint32_t> op(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      op[a * n + b] = (a + b) % n;
    }
  }
  FiniteMonoid m{name, FinSet(n, std::move(labels)), std::move(op), 0};
  m.validate();
  return m;
}

}  // namespace

FiniteMonoid trivial_monoid() { return cyclic(1, "trivial"); }
FiniteMonoid z2_monoid() { return cyclic(2, "z2"); }
FiniteMonoid z3_monoid() { return cyclic(3, "z3"); }
FiniteMonoid z4_monoid() { return cyclic(4, "z4"); }

FiniteMonoid klein_four() {
  // xor on two bits
  std::vector<std::uint32_t> op(16);
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) {
      op[a * 4 + b] = a ^ b;
    }
  }
  FiniteMonoid m{"klein4", FinSet(4, {"e", "x", "y", "xy"}), std::move(op), 0};
  m.validate();
  return m;
}

FiniteMonoid left_zero_monoid() {
  // unit e = 0; on {a,b}: x.y = x
  std::vector<std::uint32_t> op = {0, 1, 2,   //
                                   1, 1, 1,   //
                                   2, 2, 2};
  FiniteMonoid m{"leftzero3", FinSet(3, {"e", "a", "b"}), std::move(op), 0};
  m.validate();
  return m;
}

FiniteMonoid s3_monoid() {
  // permutations of {0,1,2} in a fixed listing; op = composition
  // (p * q)(x) = p(q(x))
  const std::array<std::array<std::uint32_t, 3>, 6> perms = {{
      {0, 1, 2},  // id
      {1, 0, 2},  // (01)
      {2, 1, 0},  // (02)
      {0, 2, 1},  // (12)
      {1, 2, 0},  // (012)
      {2, 0, 1},  // (021)
  }};
  auto index_of = [&](const std::array<std::uint32_t, 3>& p) -> std::uint32_t {
    for (std::uint32_t i = 0; i < 6; ++i) {
      if (perms[i] == p) return i;
    }
    throw Error("s3: composition left the permutation table");
  };
  std::vector<std::uint32_t> op(36);
  for (std::uint32_t i = 0; i < 6; ++i) {
    for (std::uint32_t j = 0; j < 6; ++j) {
      std::array<std::uint32_t, 3> c;
      for (std::uint32_t x = 0; x < 3; ++x) {
        c[x] = perms[i][perms[j][x]];
      }
      op[i * 6 + j] = index_of(c);
    }
  }
  FiniteMonoid m{"s3",
                 FinSet(6, {"id", "(01)", "(02)", "(12)", "(012)", "(021)"}),
                 std::move(op), 0};
  m.validate();
  return m;
}

std::vector<FiniteMonoid> monoids_up_to_4() {
  return {trivial_monoid(), z2_monoid(), z3_monoid(), z4_monoid(),
          klein_four(), left_zero_monoid()};
}

MonadMorphism maybe_to_bool_module() {
  MonadInstance source = maybe_monad();
  MonadInstance target = semimodule_monad(boolean_semiring());
  return MonadMorphism{
      "maybe->bool-module", source, target,
      [source, target](const FinSet& a) {
        FinSet ma = source.apply(a);
        FinSet ba = target.apply(a);
        std::vector<std::uint32_t> t(ma.size);
        for (std::uint32_t i = 0; i < a.size; ++i) {
          std::vector<std::uint32_t> coeffs(a.size, 0);
          coeffs[i] = 1;
          t[i] = target.encode_sum(coeffs);
        }
        t[a.size] = target.encode_sum(std::vector<std::uint32_t>(a.size, 0));
        return FinMap(ma, ba, std::move(t));
      }};
}

MonadMorphism writer_z2_inversion() {
  MonadInstance w = writer_monad(z2_monoid());
  return MonadMorphism{"writer-z2-inversion", w, w,
                       [w](const FinSet& a) {
                         FinSet wa = w.apply(a);
                         std::vector<std::uint32_t> t(wa.size);
                         for (std::uint32_t m = 0; m < 2; ++m) {
                           for (std::uint32_t x = 0; x < a.size; ++x) {
                             // inverse in Z2 is the element itself; the
                             // interesting content is that this is a
                             // componentwise bijection commuting with
                             // the monad structure
                             t[m * a.size + x] = ((2 - m) % 2) * a.size + x;
                           }
                         }
                         return FinMap(wa, wa, std::move(t));
                       }};
}

std::vector<FinSet> test_sets(std::uint32_t max_size) {
  std::vector<FinSet> out;
  const std::vector<std::string> letters = {"a", "b", "c", "d", "e", "f"};
  for (std::uint32_t n = 0; n <= max_size; ++n) {
    std::vector<std::string> labels(letters.begin(), letters.begin() + n);
    out.emplace_back(n, std::move(labels));
  }
  return out;
}

std::vector<FinSet> nonempty_test_sets(std::uint32_t max_size) {
  auto all = test_sets(max_size);
  all.erase(all.begin());
  return all;
}

}  // namespace fixtures
}  // namespace bimorph
