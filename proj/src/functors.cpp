#include "bimorph/functors.hpp"

namespace bimorph {

struct FunctorHandle::Node {
  Kind kind = Kind::identity;
  std::size_t in = 1;
  std::size_t out = 1;
  std::shared_ptr<const MonadInstance> monad;
  std::vector<FunctorHandle> children;  // compose: {outer, inner}; tuple: parts
};

FunctorHandle FunctorHandle::identity(std::size_t arity) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::identity;
  n->in = n->out = arity;
  return FunctorHandle(std::move(n));
}

FunctorHandle FunctorHandle::binary_product() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::product;
  n->in = 2;
  n->out = 1;
  return FunctorHandle(std::move(n));
}

FunctorHandle FunctorHandle::binary_coproduct() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::coproduct;
  n->in = 2;
  n->out = 1;
  return FunctorHandle(std::move(n));
}

FunctorHandle FunctorHandle::monad_functor(MonadInstance t) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::monad;
  n->in = n->out = t.arity();
  n->monad = std::make_shared<MonadInstance>(std::move(t));
  return FunctorHandle(std::move(n));
}

FunctorHandle FunctorHandle::composed(FunctorHandle outer,
                                      FunctorHandle inner) {
  if (inner.out_arity() != outer.in_arity()) {
    throw TypeMismatch("functor composition: arity mismatch (" +
                       std::to_string(inner.out_arity()) + " vs " +
                       std::to_string(outer.in_arity()) + ")");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::compose;
  n->in = inner.in_arity();
  n->out = outer.out_arity();
  n->children = {std::move(outer), std::move(inner)};
  return FunctorHandle(std::move(n));
}

FunctorHandle FunctorHandle::tuple(std::vector<FunctorHandle> parts) {
  if (parts.empty()) {
    throw TypeMismatch("functor tuple: empty part list");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::tuple;
  n->in = parts.front().in_arity();
  n->out = 0;
  for (const auto& p : parts) {
    if (p.in_arity() != n->in) {
      throw TypeMismatch("functor tuple: parts disagree on input arity");
    }
    n->out += p.out_arity();
  }
  n->children = std::move(parts);
  return FunctorHandle(std::move(n));
}

FunctorHandle::Kind FunctorHandle::kind() const { return node_->kind; }
std::size_t FunctorHandle::in_arity() const { return node_->in; }
std::size_t FunctorHandle::out_arity() const { return node_->out; }

std::string FunctorHandle::describe() const {
  switch (node_->kind) {
    case Kind::identity:
      return "Id";
    case Kind::product:
      return "Product";
    case Kind::coproduct:
      return "Coproduct";
    case Kind::monad:
      return node_->monad->name();
    case Kind::compose:
      return node_->children[0].describe() + "." +
             node_->children[1].describe();
    case Kind::tuple: {
      std::string s = "<";
      for (std::size_t i = 0; i < node_->children.size(); ++i) {
        if (i > 0) s += ",";
        s += node_->children[i].describe();
      }
      return s + ">";
    }
  }
  return "?";
}

Obj FunctorHandle::apply(const Obj& a) const {
  if (a.arity() != node_->in) {
    throw TypeMismatch("functor " + describe() + ": expected arity " +
                       std::to_string(node_->in) + " object, got " +
                       std::to_string(a.arity()));
  }
  switch (node_->kind) {
    case Kind::identity:
      return a;
    case Kind::product:
      return Obj(product(a.parts[0], a.parts[1]).carrier);
    case Kind::coproduct:
      return Obj(coproduct(a.parts[0], a.parts[1]).carrier);
    case Kind::monad:
      return node_->monad->apply(a);
    case Kind::compose:
      return node_->children[0].apply(node_->children[1].apply(a));
    case Kind::tuple: {
      std::vector<FinSet> parts;
      for (const auto& c : node_->children) {
        Obj o = c.apply(a);
        parts.insert(parts.end(), o.parts.begin(), o.parts.end());
      }
      return Obj(std::move(parts));
    }
  }
  throw TypeMismatch("unreachable functor kind");
}

Mor FunctorHandle::map(const Mor& f) const {
  if (f.arity() != node_->in) {
    throw TypeMismatch("functor " + describe() + ": expected arity " +
                       std::to_string(node_->in) + " morphism, got " +
                       std::to_string(f.arity()));
  }
  switch (node_->kind) {
    case Kind::identity:
      return f;
    case Kind::product: {
      ProductSet target = product(f.parts[0].cod, f.parts[1].cod);
      return Mor(target.map(f.parts[0], f.parts[1]));
    }
    case Kind::coproduct: {
      CoproductSet target = coproduct(f.parts[0].cod, f.parts[1].cod);
      return Mor(target.map(f.parts[0], f.parts[1]));
    }
    case Kind::monad:
      return node_->monad->map(f);
    case Kind::compose:
      return node_->children[0].map(node_->children[1].map(f));
    case Kind::tuple: {
      std::vector<FinMap> parts;
      for (const auto& c : node_->children) {
        Mor m = c.map(f);
        parts.insert(parts.end(), m.parts.begin(), m.parts.end());
      }
      return Mor(std::move(parts));
    }
  }
  throw TypeMismatch("unreachable functor kind");
}

FinSet FunctorHandle::apply(const FinSet& a) const {
  return apply(Obj(a)).single();
}

FinMap FunctorHandle::map(const FinMap& f) const {
  return map(Mor(f)).single();
}

Verdict naturality_square(const NatFamily& fam, const Mor& f) {
  Mor lhs = compose(fam.target.map(f), fam.component_at(f.dom()));
  Mor rhs = compose(fam.component_at(f.cod()), fam.source.map(f));
  if (lhs == rhs) {
    return Verdict::pass();
  }
  for (std::size_t p = 0; p < lhs.arity(); ++p) {
    const FinMap& l = lhs.parts[p];
    const FinMap& r = rhs.parts[p];
    for (std::uint32_t x = 0; x < l.dom.size; ++x) {
      if (l.table[x] != r.table[x]) {
        return Verdict::fail("naturality of " + fam.name + " fails at " +
                             l.dom.label(x) + ": " + l.cod.label(l.table[x]) +
                             " vs " + r.cod.label(r.table[x]));
      }
    }
  }
  return Verdict::fail("naturality of " + fam.name +
                       ": structurally unequal legs");
}

}  // namespace bimorph
