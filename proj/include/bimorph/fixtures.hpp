#ifndef BIMORPH_FIXTURES_HPP_
#define BIMORPH_FIXTURES_HPP_

#include "bimorph/monads.hpp"

namespace bimorph {
namespace fixtures {

// Semirings
FiniteSemiring boolean_semiring();  // ({0,1}, or, and)
FiniteSemiring f2();                // ({0,1}, xor, and)
FiniteSemiring z4();                // integers mod 4
// 2x2 upper-triangular matrices over the Boolean semiring; the
// standard 8-element non-commutative fixture.
FiniteSemiring bool_triangular();

// Monoids
FiniteMonoid trivial_monoid();
FiniteMonoid z2_monoid();
FiniteMonoid z3_monoid();
FiniteMonoid z4_monoid();
FiniteMonoid klein_four();
// {e,a,b} with xy = x on {a,b}: the smallest non-commutative monoid.
FiniteMonoid left_zero_monoid();
FiniteMonoid s3_monoid();  // symmetric group on 3 letters

// All monoid fixtures of order <= 4, for exhaustive agreement checks.
std::vector<FiniteMonoid> monoids_up_to_4();

// sigma : maybe => semimodule(Bool), a |-> {a}, bottom |-> {}.
MonadMorphism maybe_to_bool_module();

// Componentwise bijection (m,a) |-> (-m,a) on writer(Z2); an
// invertible law fixture.
MonadMorphism writer_z2_inversion();

// Standard test sets of sizes 0..max_size with letter labels.
std::vector<FinSet> test_sets(std::uint32_t max_size);
// Same without the empty set (for checks quantified over nonempty
// carriers).
std::vector<FinSet> nonempty_test_sets(std::uint32_t max_size);

}  // namespace fixtures
}  // namespace bimorph

#endif  // BIMORPH_FIXTURES_HPP_
