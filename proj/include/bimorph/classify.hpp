#ifndef BIMORPH_CLASSIFY_HPP_
#define BIMORPH_CLASSIFY_HPP_

#include "bimorph/bimorphisms.hpp"

namespace bimorph {

// The classifying object (W, omega) of left lambda-morphisms out of
// (A, alpha): the coequalizer of mu . F(lambda_A) and F(H(alpha)) out
// of the free T-algebra on H(A), together with the quotient q, the
// universal bimorphism u = q . eta, and a section of q used to compute
// fill-ins.
struct ClassifyingObject {
  Algebra base;       // (A, alpha), an S-algebra (S may be a product monad)
  FunctorHandle H;
  FinMap lambda_a;    // component H(S(A)) -> T(H(A))
  MonadInstance t;
  Algebra result;     // (W, omega)
  FinMap q;           // T(H(A)) -> W, an algebra morphism
  FinMap u;           // H(A) -> W, a left lambda-morphism alpha => omega
  FinMap section;     // s : W -> T(H(A)) with q . s = id
  bool reflexive_pair = false;
  std::string warning;
};

// Congruence-generation construction, seeded on generators with the
// pairs (lambda(y), eta(H(alpha)(y))). Needs T^2(H(A)) within budget.
ClassifyingObject classifying_object_congruence(const FunctorHandle& h,
                                                const FinMap& lambda_a,
                                                const Algebra& alpha,
                                                const MonadInstance& t);

// Split-epimorphism construction for a free base algebra alpha =
// (S(A0), mu): W = T(H(A0)) with q = mu . T(lambda_{A0}) (a Kleisli
// extension) and section T(H(eta)). Requires the Kleisli axioms at A0
// and naturality of lambda at eta, which are checked and reported via
// KleisliAxiomFails.
ClassifyingObject classifying_object_free(const FunctorHandle& h,
                                          const NatFamily& lambda,
                                          const Algebra& alpha,
                                          const MonadInstance& t);

// Dispatcher: congruence construction when within budget, otherwise
// the free-algebra construction when `alpha` records free provenance.
ClassifyingObject classifying_object(const FunctorHandle& h,
                                     const NatFamily& lambda,
                                     const Algebra& alpha,
                                     const MonadInstance& t);

// The unique algebra morphism W -> C with hat(h) . u = h, computed as
// the coequalizer fill-in of gamma . T(h); NotABimorphism when h fails
// the lambda-morphism check, NotAMorphism when the fill-in is not
// well-defined (cannot happen for a lambda-morphism).
FinMap hat(const FinMap& h, const ClassifyingObject& co, const Algebra& gamma);

// unhat(k) = k . u, checked to be a lambda-morphism.
FinMap unhat(const FinMap& k, const ClassifyingObject& co,
             const Algebra& gamma);

// Functorial action on an algebra morphism f : alpha -> alpha2: the
// fill-in of q2 . T(H(f)) through q. The naturality square of lambda
// at f is a precondition (NaturalitySquareFails with witness).
FinMap lift_on_morphisms(const NatFamily& lambda, const Mor& f,
                         const ClassifyingObject& co_src,
                         const ClassifyingObject& co_dst);

// Mutually inverse algebra morphisms between the classifying object of
// a free base algebra and the free T-algebra on H(A0).
struct FreeIso {
  ClassifyingObject co;
  Algebra free_target;  // (T(H(A0)), mu)
  FinMap forward;       // W -> T(H(A0))
  FinMap backward;      // T(H(A0)) -> W
};

FreeIso free_iso(const FunctorHandle& h, const NatFamily& lambda,
                 const MonadInstance& s, const MonadInstance& t,
                 const Obj& a0);

// lambda families for the two standard instances.
NatFamily dst_family(const MonadInstance& t);        // H = binary product
NatFamily coproduct_injection_family(const MonadInstance& t);  // [T(k1),T(k2)]

// Tensor product of two T-algebras over a commutative monad: H =
// binary product, lambda = dst over the product monad (T,T). A
// non-commutativity warning is recorded on the result.
ClassifyingObject tensor(const Algebra& alpha, const Algebra& beta,
                         const MonadInstance& t);

// Binary coproduct in the EM category: H = binary coproduct, lambda =
// [T(k1), T(k2)].
ClassifyingObject coproduct_lift(const Algebra& alpha, const Algebra& beta,
                                 const MonadInstance& t);

// The product-monad algebra ((A,B), (alpha,beta)) used as the base of
// binary classifying objects.
Algebra pair_algebra(const Algebra& alpha, const Algebra& beta);

// All left lambda-morphisms from co.base to gamma, by filtering all
// maps H(A) -> C.
std::vector<FinMap> enumerate_bimorphisms(const ClassifyingObject& co,
                                          const Algebra& gamma);

}  // namespace bimorph

#endif  // BIMORPH_CLASSIFY_HPP_
