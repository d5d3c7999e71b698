#ifndef BIMORPH_BIMORPHISMS_HPP_
#define BIMORPH_BIMORPHISMS_HPP_

#include "bimorph/algebras.hpp"
#include "bimorph/functors.hpp"
#include "bimorph/strength.hpp"

namespace bimorph {

// h : H(A) -> B is a left lambda-morphism from the S-algebra (A,alpha)
// to the T-algebra (B,beta) when beta . T(h) . lambda_A = h . H(alpha).
// lambda_a is the single component H(S(A)) -> T(H(A)); naturality is
// not involved in the pointwise condition.
Verdict is_left_lambda_morphism(const FinMap& h, const FinMap& lambda_a,
                                const FunctorHandle& H, const Algebra& alpha,
                                const Algebra& beta);

// h : A -> G(B) is a right rho-morphism when
// G(beta) . rho_B . S(h) = h . alpha, with rho_b : S(G(B)) -> G(T(B)).
Verdict is_right_rho_morphism(const Mor& h, const Mor& rho_b,
                              const FunctorHandle& G, const Algebra& alpha,
                              const Algebra& beta);

// Bilinearity of h : A x B -> C over a commutative monad: the double-
// strength square (with dst) and its left/right single-strength
// components. The equivalence "bilinear iff both components" is a
// tested property, not assumed here.
Verdict is_bilinear(const FinMap& h, const MonadInstance& t,
                    const Algebra& alpha, const Algebra& beta,
                    const Algebra& gamma);
Verdict left_component(const FinMap& h, const MonadInstance& t,
                       const Algebra& alpha, const Algebra& beta,
                       const Algebra& gamma);
Verdict right_component(const FinMap& h, const MonadInstance& t,
                        const Algebra& alpha, const Algebra& beta,
                        const Algebra& gamma);

// Kleisli-law axioms for lambda : H.S => T.H — naturality on all maps
// among the test objects, the unit diagram lambda . H(eta) = eta, and
// the multiplication diagram mu . T(lambda) . lambda = lambda . H(mu)
// (the left side evaluated as a Kleisli extension).
LawReport is_kleisli_law(const NatFamily& lambda, const FunctorHandle& h,
                         const MonadInstance& s, const MonadInstance& t,
                         const std::vector<Obj>& test_objects);

// Eilenberg-Moore-law axioms for rho : S.G => G.T, mirrored.
LawReport is_em_law(const NatFamily& rho, const FunctorHandle& g,
                    const MonadInstance& s, const MonadInstance& t,
                    const std::vector<Obj>& test_objects);

// Lifting of a Kleisli morphism f : A -> S(B) along a Kleisli law:
// H(A) -> H(S(B)) -> T(H(B)). `b` names the base object B.
Mor kleisli_lift(const FunctorHandle& h, const NatFamily& lambda,
                 const Mor& f, const Obj& b);

// Kleisli composition g * f = (mu . T(g)) . f.
FinMap kleisli_compose(const MonadInstance& s, const FinMap& g,
                       const FinMap& f, const FinSet& b, const FinSet& c);

// Lifting of a T-algebra along an EM law: (B,beta) -> (G(B),
// G(beta) . rho_B), an algebra of S.
Algebra em_lift(const FunctorHandle& g, const NatFamily& rho,
                const Algebra& beta, const MonadInstance& s);

// Invert every component of rho (NotInvertible otherwise) and check
// that the inverse family G.T => S.G is a Kleisli law.
LawReport em_law_inverse_is_kleisli(const NatFamily& rho,
                                    const FunctorHandle& g,
                                    const MonadInstance& s,
                                    const MonadInstance& t,
                                    const std::vector<Obj>& test_objects);

// Composite of bimorphisms: given h : H(A) -> B (a lambda-morphism
// alpha => beta) and k : G(B) -> C (a lambda2-morphism beta => gamma),
// the composite k . G(h) is a (lambda2 . G(lambda))-morphism
// alpha => gamma via G.H; both pieces are returned and the result is
// asserted.
struct ComposedBimorphism {
  FinMap morphism;  // k . G(h) : G(H(A)) -> C
  FinMap mediator;  // lambda2_{H(A)} . G(lambda_A)
};
ComposedBimorphism compose_bimorphisms(
    const FinMap& h, const FinMap& lambda_a, const FunctorHandle& H,
    const Algebra& alpha, const Algebra& beta, const FinMap& k,
    const NatFamily& lambda2, const FunctorHandle& G, const Algebra& gamma);

// n-ary Kleisli law reduced to the product monad of the sources; also
// runs the direct n-ary diagrams and asserts both routes agree.
LawReport nary_kleisli_law_check(const NatFamily& lambda,
                                 const FunctorHandle& h,
                                 const std::vector<MonadInstance>& sources,
                                 const MonadInstance& t,
                                 const std::vector<FinSet>& test_sets);

// Beck-compatibility of a pair of algebra structures on one carrier
// with a distributive law lambda : S.T => T.S.
Verdict check_distributive_law_algebra(const NatFamily& lambda,
                                       const MonadInstance& s,
                                       const MonadInstance& t,
                                       const Algebra& alg_s,
                                       const Algebra& alg_t);

}  // namespace bimorph

#endif  // BIMORPH_BIMORPHISMS_HPP_
