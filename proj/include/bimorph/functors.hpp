#ifndef BIMORPH_FUNCTORS_HPP_
#define BIMORPH_FUNCTORS_HPP_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "bimorph/monads.hpp"

namespace bimorph {

// A functor between finite powers of the base category, as a closed
// expression: identity, binary (co)product, a monad's underlying
// functor, composition, or tupling. Closed expressions (rather than
// arbitrary callables) guarantee deterministic images on fresh quotient
// carriers.
class FunctorHandle {
 public:
  enum class Kind { identity, product, coproduct, monad, compose, tuple };

  static FunctorHandle identity(std::size_t arity = 1);
  static FunctorHandle binary_product();    // C^2 -> C
  static FunctorHandle binary_coproduct();  // C^2 -> C
  static FunctorHandle monad_functor(MonadInstance t);
  // outer . inner; requires inner.out_arity() == outer.in_arity()
  static FunctorHandle composed(FunctorHandle outer, FunctorHandle inner);
  // <F_1,...,F_k> with a shared input arity; output arities concatenate
  static FunctorHandle tuple(std::vector<FunctorHandle> parts);

  Kind kind() const;
  std::size_t in_arity() const;
  std::size_t out_arity() const;
  std::string describe() const;

  Obj apply(const Obj& a) const;
  Mor map(const Mor& f) const;

  // Arity (1 -> 1) conveniences.
  FinSet apply(const FinSet& a) const;
  FinMap map(const FinMap& f) const;

 private:
  struct Node;
  explicit FunctorHandle(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// A componentwise-given family of maps between composite functors, such
// as lambda : H.S => T.H or rho : S.G => G.T. Naturality is never
// assumed; it is a queryable property checked per-morphism.
struct NatFamily {
  std::string name;
  FunctorHandle source;  // domain composite functor
  FunctorHandle target;  // codomain composite functor
  std::function<Mor(const Obj&)> component_at;

  // Arity-1 convenience.
  FinMap component(const FinSet& a) const {
    return component_at(Obj(a)).single();
  }
};

// The single naturality square of fam at f: target.map(f) . fam(dom) =
// fam(cod) . source.map(f).
Verdict naturality_square(const NatFamily& fam, const Mor& f);

}  // namespace bimorph

#endif  // BIMORPH_FUNCTORS_HPP_
