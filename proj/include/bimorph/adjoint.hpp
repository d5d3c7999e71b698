#ifndef BIMORPH_ADJOINT_HPP_
#define BIMORPH_ADJOINT_HPP_

#include "bimorph/classify.hpp"

namespace bimorph {

// A monad morphism sigma : S => T induces a restriction functor
// between the EM categories (right_apply) and a left adjoint built
// from classifying objects (left_apply). Only the identity adjunction
// on the base category is implemented; the transpose of sigma under it
// is sigma itself.
struct LiftedAdjunction {
  MonadMorphism sigma;
  NatFamily law;  // sigma packaged as a family with identity functors

  // R(beta) = (B, beta . sigma_B), an S-algebra.
  Algebra right_apply(const Algebra& beta) const;
  // L(alpha) = classifying object of sigma-morphisms out of alpha.
  ClassifyingObject left_apply(const Algebra& alpha) const;
};

// sigma viewed as a one-component-per-object family S.Id => Id.T.
NatFamily monad_morphism_family(const MonadMorphism& sigma);

// Under the identity adjunction sigma must be simultaneously an EM law
// and a Kleisli law; both reports are returned merged, entries
// prefixed "em:" and "kleisli:".
LawReport transpose_check(const MonadMorphism& sigma,
                          const std::vector<FinSet>& test_sets);

// Builds the adjunction after transpose_check passes on the given test
// sets (throws KleisliAxiomFails otherwise).
LiftedAdjunction lift_adjunction(const MonadMorphism& sigma,
                                 const std::vector<FinSet>& test_sets);

// Hom-set bijection #Hom_T(L(alpha), beta) = #Hom_S(alpha, R(beta)),
// verified by enumerating both sides and mapping across hat; also
// checks injectivity of the mapping.
LawReport verify_adjunction_bijection(const LiftedAdjunction& adj,
                                      const Algebra& alpha,
                                      const Algebra& beta);

// Naturality of the bijection in beta: for a T-algebra morphism
// g : beta -> beta2, transporting h then post-composing with g agrees
// with post-composing with R(g) then transporting.
LawReport verify_bijection_naturality(const LiftedAdjunction& adj,
                                      const Algebra& alpha,
                                      const Algebra& beta,
                                      const Algebra& beta2, const FinMap& g);

}  // namespace bimorph

#endif  // BIMORPH_ADJOINT_HPP_
