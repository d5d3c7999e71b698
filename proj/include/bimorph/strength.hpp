#ifndef BIMORPH_STRENGTH_HPP_
#define BIMORPH_STRENGTH_HPP_

#include <functional>
#include <string>

#include "bimorph/monads.hpp"

namespace bimorph {

// The tensorial strength of an arity-1 monad on finite sets, given
// componentwise. st : A x T(B) -> T(A x B); st' : T(A) x B -> T(A x B).
// Components are functions so that tests can substitute corrupted
// tables; nothing here assumes the laws hold.
struct StrengthData {
  MonadInstance monad;
  std::function<FinMap(const FinSet&, const FinSet&)> st_at;
  std::function<FinMap(const FinSet&, const FinSet&)> st_co_at;
};

// The canonical strength st(a,t) = T(b |-> (a,b))(t); the costrength is
// derived from st through the symmetry: T(swap) . st . swap.
StrengthData canonical_strength(const MonadInstance& t);

// Double strengths T(A) x T(B) -> T(A x B):
//   dst  = mu . T(st') . st      dst' = mu . T(st) . st'
// Both are computed columnwise through Kleisli extension -- e.g.
// dst(u,v) = bind(b |-> st'(u,b))(v) -- which is the same composite
// evaluated without materializing T(T(A) x B).
FinMap dst(const StrengthData& sd, const FinSet& a, const FinSet& b);
FinMap dst_prime(const StrengthData& sd, const FinSet& a, const FinSet& b);

// Convenience over the canonical strength.
FinMap dst(const MonadInstance& t, const FinSet& a, const FinSet& b);
FinMap dst_prime(const MonadInstance& t, const FinSet& a, const FinSet& b);

// Strength coherence (unit object, associativity), eta/mu compatibility,
// and the symmetry relation defining st'. The mu square is evaluated in
// its Kleisli-extension form (see dst above); out-of-budget instances
// are reported as skipped.
LawReport check_strength_axioms(const StrengthData& sd,
                                const std::vector<FinSet>& test_sets);

struct CommutativityVerdict {
  bool commutative = true;
  std::string witness;  // a pair (u,v) with dst(u,v) != dst'(u,v)
  std::string scope;    // what was actually checked / skipped

  explicit operator bool() const { return commutative; }
};

// dst == dst' pointwise on all pairs of test sets within budget. This
// certifies commutativity only over the supplied sets; `scope` records
// the quantification domain and any skipped pairs.
CommutativityVerdict is_commutative(const StrengthData& sd,
                                    const std::vector<FinSet>& test_sets);
CommutativityVerdict is_commutative(const MonadInstance& t,
                                    const std::vector<FinSet>& test_sets);

}  // namespace bimorph

#endif  // BIMORPH_STRENGTH_HPP_
