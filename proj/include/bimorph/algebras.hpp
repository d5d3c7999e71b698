#ifndef BIMORPH_ALGEBRAS_HPP_
#define BIMORPH_ALGEBRAS_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "bimorph/monads.hpp"

namespace bimorph {

// An Eilenberg-Moore algebra (A, alpha) with alpha : T(A) -> A. The
// axioms are not assumed at construction; is_algebra checks them.
// `free_on` records provenance when the algebra was built as a free
// algebra; fast paths exploit it but never require it.
struct Algebra {
  MonadInstance monad;
  Obj carrier;
  Mor structure;
  std::optional<Obj> free_on;

  // Arity-1 conveniences.
  const FinSet& carrier1() const { return carrier.single(); }
  const FinMap& structure1() const { return structure.single(); }
};

Algebra make_algebra(MonadInstance t, FinSet carrier, FinMap structure);

// Unit axiom alpha . eta = id and multiplication axiom
// alpha . mu = alpha . T(alpha); the latter enumerates T^2(carrier).
Verdict is_algebra(const Algebra& a);

Algebra free_algebra(const MonadInstance& t, const Obj& a);
Algebra free_algebra(const MonadInstance& t, const FinSet& a);

// h . alpha = beta . T(h)
bool is_algebra_morphism(const Mor& h, const Algebra& a, const Algebra& b);
bool is_algebra_morphism(const FinMap& h, const Algebra& a, const Algebra& b);

// All structure-preserving maps, in lexicographic table order.
std::vector<FinMap> enumerate_algebra_morphisms(const Algebra& a,
                                                const Algebra& b);

// Union-find over carrier indices; class representative is the least
// index of the class.
class Partition {
 public:
  explicit Partition(std::uint32_t n);

  std::uint32_t find(std::uint32_t x) const;
  bool merge(std::uint32_t x, std::uint32_t y);  // true if classes joined
  std::uint32_t classes() const { return classes_; }

  // The canonical surjection onto 0..classes-1, classes numbered in
  // order of their least representative.
  FinMap quotient_map(const FinSet& carrier) const;
  // A section of quotient_map: least representative of each class.
  FinMap section_least(const FinSet& carrier) const;
  // Alternative section (greatest representative), for the
  // well-definedness assertion of the quotient structure map.
  FinMap section_greatest(const FinSet& carrier) const;

 private:
  mutable std::vector<std::uint32_t> parent_;
  std::uint32_t classes_;
};

struct CoequalizerResult {
  Algebra algebra;  // the quotient (W, omega)
  FinMap q;         // canonical surjection carrier(beta) -> W
  bool reflexive_pair = false;  // metadata: a common section was found
};

// Coequalizer of algebra morphisms f, g : a -> b in the EM category,
// by congruence generation: seed with {(f(x), g(x))}, then iterate
// "group T(carrier) by T(q), merge beta-images within each group" to a
// fixpoint. The structure map omega([t]) = q(beta(T(s)(t))) is computed
// with the least-representative section and asserted equal under the
// greatest-representative section.
CoequalizerResult coequalize(const FinMap& f, const FinMap& g,
                             const Algebra& a, const Algebra& b);

// Same congruence engine with an explicit seed relation on carrier(b)
// (used by the classifying-object construction's generator seeding).
CoequalizerResult coequalize_seeded(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& seeds,
    const Algebra& b);

// All algebras of t on the carrier, by filtering all structure maps.
std::vector<Algebra> enumerate_algebras_brute(const MonadInstance& t,
                                              const FinSet& carrier);

// Fast enumeration for semimodule monads: structures correspond to
// (zero, commutative-monoid addition, scalar action) triples; the
// resulting structure map folds the action over the addition. Every
// output is re-asserted with is_algebra.
std::vector<Algebra> enumerate_semimodule_algebras(const MonadInstance& t,
                                                   const FinSet& carrier);

// Dispatcher: fast path when available and the brute force would
// exceed the budget.
std::vector<Algebra> algebras_on(const MonadInstance& t,
                                 const FinSet& carrier);

}  // namespace bimorph

#endif  // BIMORPH_ALGEBRAS_HPP_
