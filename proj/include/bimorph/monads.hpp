#ifndef BIMORPH_MONADS_HPP_
#define BIMORPH_MONADS_HPP_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "bimorph/finset.hpp"
#include "bimorph/report.hpp"

namespace bimorph {

// A semiring on a finite carrier. Both operation tables are row-major.
// Axioms are checked at construction (validate throws ValidationError
// with a witness).
struct FiniteSemiring {
  std::string name;
  FinSet carrier;
  std::vector<std::uint32_t> add;  // carrier.size^2, row-major
  std::vector<std::uint32_t> mul;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;

  std::uint32_t plus(std::uint32_t a, std::uint32_t b) const {
    return add[a * carrier.size + b];
  }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const {
    return mul[a * carrier.size + b];
  }

  void validate() const;
  bool multiplication_commutative() const;
};

struct FiniteMonoid {
  std::string name;
  FinSet carrier;
  std::vector<std::uint32_t> op;  // row-major
  std::uint32_t unit = 0;

  std::uint32_t times(std::uint32_t a, std::uint32_t b) const {
    return op[a * carrier.size + b];
  }

  void validate() const;
  bool commutative() const;
};

// A finitary monad on finite sets (or on a finite power of them, for
// product monads), given by computable actions. Values are immutable
// and cheap to copy.
//
// The monad is defined on *all* finite sets: fresh quotient carriers
// from the coequalizer engine are valid inputs everywhere.
class MonadInstance {
 public:
  enum class Kind { identity, maybe, writer, semimodule, product };

  const std::string& name() const;
  Kind kind() const;
  std::size_t arity() const;

  // Functor action on objects and morphisms.
  Obj apply(const Obj& a) const;
  Mor map(const Mor& f) const;
  Mor unit(const Obj& a) const;   // eta_A : A -> T(A)
  Mor mult(const Obj& a) const;   // mu_A : T^2(A) -> T(A)

  // Arity-1 conveniences.
  FinSet apply(const FinSet& a) const;
  FinMap map(const FinMap& f) const;
  FinMap unit(const FinSet& a) const;
  FinMap mult(const FinSet& a) const;

  // Kleisli extension of f : X -> T(Y), i.e. mu . T(f) : T(X) -> T(Y).
  // Computed without materializing T(T(Y)), which keeps composites like
  // the double strengths inside budget.
  FinMap kleisli_extend(const FinMap& f, const FinSet& x,
                        const FinSet& y) const;

  // Introspection for monad-specific fixtures; null when inapplicable.
  const FiniteSemiring* semiring() const;
  const FiniteMonoid* monoid() const;
  const std::vector<MonadInstance>* components() const;

  // Encoding helpers for the semimodule monad: element index <->
  // coefficient vector over the base set, entry i weighted |S|^i.
  std::vector<std::uint32_t> decode_sum(std::uint32_t elem,
                                        std::uint32_t base_size) const;
  std::uint32_t encode_sum(const std::vector<std::uint32_t>& coeffs) const;

  struct Impl;
  explicit MonadInstance(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const Impl> impl_;
};

MonadInstance identity_monad();
MonadInstance maybe_monad();
MonadInstance writer_monad(FiniteMonoid m);
MonadInstance semimodule_monad(FiniteSemiring s);
MonadInstance product_monad(std::vector<MonadInstance> components);

// A componentwise-given transformation sigma_A : S(A) -> T(A). The
// monad-morphism laws are checked by check_monad_morphism, not assumed.
struct MonadMorphism {
  std::string name;
  MonadInstance source;
  MonadInstance target;
  std::function<FinMap(const FinSet&)> component_at;
};

// Exhaustive monad-law check over the given test sets. Checks that do
// not fit the budget are reported as skipped, with the overrun noted.
LawReport check_monad_laws(const MonadInstance& t,
                           const std::vector<FinSet>& test_sets);

LawReport check_monad_morphism(const MonadMorphism& sigma,
                               const std::vector<FinSet>& test_sets);

// Test objects for an arity-n monad: all n-tuples over test_sets.
std::vector<Obj> tuple_objects(const MonadInstance& t,
                               const std::vector<FinSet>& test_sets);

}  // namespace bimorph

#endif  // BIMORPH_MONADS_HPP_
