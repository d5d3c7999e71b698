#include "bimorph/classify.hpp"

namespace bimorph {

namespace {

std::string map_diff(const FinMap& f, const FinMap& g) {
  for (std::uint32_t x = 0; x < f.dom.size; ++x) {
    if (f.table[x] != g.table[x]) {
      return "at " + f.dom.label(x) + "(#" + std::to_string(x) +
             "): " + f.cod.label(f.table[x]) + " vs " + g.cod.label(g.table[x]);
    }
  }
  return "(structurally unequal)";
}

void assert_universal_bimorphism(ClassifyingObject& co) {
  Verdict v = is_left_lambda_morphism(co.u, co.lambda_a, co.H, co.base,
                                      co.result);
  if (!v) {
    throw Error("classifying object: u = q . eta is not a lambda-morphism: " +
                v.witness);
  }
}

}  // namespace

ClassifyingObject classifying_object_congruence(const FunctorHandle& h,
                                                const FinMap& lambda_a,
                                                const Algebra& alpha,
                                                const MonadInstance& t) {
  Verdict va = is_algebra(alpha);
  if (!va) {
    throw NotAnAlgebra("classifying object base: " + va.witness);
  }
  FinSet ha = h.apply(alpha.carrier).single();
  FinSet hsa = h.apply(alpha.monad.apply(alpha.carrier)).single();
  if (!(lambda_a.dom == hsa) || !(lambda_a.cod == t.apply(ha))) {
    throw TypeMismatch("lambda component must have type H(S(A)) -> T(H(A))");
  }
  Algebra b_free = free_algebra(t, ha);
  FinMap eta = t.unit(ha);
  FinMap h_alpha = h.map(alpha.structure).single();

  // Generator seeding: a T-algebra morphism k out of the free algebra
  // satisfies k . mu . T(lambda) = k . T(H(alpha)) iff it equalizes the
  // generator pairs (lambda(y), eta(H(alpha)(y))).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seeds;
  seeds.reserve(hsa.size);
  for (std::uint32_t y = 0; y < hsa.size; ++y) {
    seeds.emplace_back(lambda_a(y), eta(h_alpha(y)));
  }
  CoequalizerResult ce = coequalize_seeded(seeds, b_free);

  ClassifyingObject co{alpha,
                       h,
                       lambda_a,
                       t,
                       ce.algebra,
                       ce.q,
                       compose(ce.q, eta),
                       FinMap(),
                       false,
                       {}};
  // section: least preimage of each class under q
  {
    std::vector<std::uint32_t> sec(co.result.carrier1().size, 0);
    for (std::uint32_t x = co.q.dom.size; x > 0; --x) {
      sec[co.q(x - 1)] = x - 1;
    }
    co.section = FinMap(co.result.carrier1(), co.q.dom, std::move(sec));
  }
  // reflexivity metadata: T(H(eta^S)) is a common section of the
  // defining pair exactly when both composites are the identity
  try {
    FinMap the = t.map(h.map(alpha.monad.unit(alpha.carrier)).single());
    FinMap mu_tlam = t.kleisli_extend(lambda_a, hsa, ha);
    FinMap th_alpha = t.map(h_alpha);
    co.reflexive_pair = compose(mu_tlam, the) == FinMap::identity(co.q.dom) &&
                        compose(th_alpha, the) == FinMap::identity(co.q.dom);
  } catch (const SizeBudgetExceeded&) {
    co.reflexive_pair = false;
  }
  assert_universal_bimorphism(co);
  return co;
}

ClassifyingObject classifying_object_free(const FunctorHandle& h,
                                          const NatFamily& lambda,
                                          const Algebra& alpha,
                                          const MonadInstance& t) {
  if (!alpha.free_on) {
    throw TypeMismatch(
        "classifying_object_free: base algebra has no free provenance");
  }
  const MonadInstance& s = alpha.monad;
  const Obj& a0 = *alpha.free_on;
  Obj a = alpha.carrier;  // = S(A0)
  FinSet ha0 = h.apply(a0).single();
  FinSet ha = h.apply(a).single();
  FinMap lam0 = lambda.component_at(a0).single();   // H(S(A0)) -> T(H(A0))
  FinMap lam_a = lambda.component_at(a).single();   // H(S(S(A0))) -> T(H(S(A0)))

  // Kleisli unit axiom at A0: lambda . H(eta) = eta
  {
    FinMap lhs = compose(lam0, h.map(s.unit(a0)).single());
    FinMap rhs = t.unit(ha0);
    if (!(lhs == rhs)) {
      throw KleisliAxiomFails("unit axiom at the base object: " +
                              map_diff(lhs, rhs));
    }
  }
  // Kleisli multiplication axiom at A0: mu . T(lambda) . lambda =
  // lambda . H(mu), the left side as a Kleisli extension
  {
    FinMap lhs = compose(t.kleisli_extend(lam0, ha, ha0), lam_a);
    FinMap rhs = compose(lam0, h.map(s.mult(a0)).single());
    if (!(lhs == rhs)) {
      throw KleisliAxiomFails("multiplication axiom at the base object: " +
                              map_diff(lhs, rhs));
    }
  }
  // naturality of lambda at eta_{A0}
  {
    Mor eta0 = s.unit(a0);
    FinMap lhs = compose(lam_a, h.map(s.map(eta0)).single());
    FinMap rhs = compose(t.map(h.map(eta0).single()), lam0);
    if (!(lhs == rhs)) {
      throw KleisliAxiomFails("naturality at the unit: " + map_diff(lhs, rhs));
    }
  }

  Algebra result = free_algebra(t, ha0);
  // q = mu . T(lambda_{A0}) : T(H(S(A0))) -> T(H(A0))
  FinMap q = t.kleisli_extend(lam0, ha, ha0);
  FinMap section = t.map(h.map(s.unit(a0)).single());  // T(H(eta))
  if (!(compose(q, section) == FinMap::identity(result.carrier1()))) {
    throw Error("free classifying object: q is not split by T(H(eta))");
  }
  // q coequalizes the defining pair on generators
  {
    FinMap eta_ha = t.unit(ha);
    FinMap h_alpha = h.map(alpha.structure).single();
    FinSet hsa = h.apply(s.apply(a)).single();
    for (std::uint32_t y = 0; y < hsa.size; ++y) {
      if (q(lam_a(y)) != q(eta_ha(h_alpha(y)))) {
        throw Error("free classifying object: q fails to coequalize at " +
                    hsa.label(y));
      }
    }
  }
  ClassifyingObject co{alpha,  h, lam_a, t, result, q, compose(q, t.unit(ha)),
                       section, true, {}};
  assert_universal_bimorphism(co);
  return co;
}

ClassifyingObject classifying_object(const FunctorHandle& h,
                                     const NatFamily& lambda,
                                     const Algebra& alpha,
                                     const MonadInstance& t) {
  try {
    return classifying_object_congruence(
        h, lambda.component_at(alpha.carrier).single(), alpha, t);
  } catch (const SizeBudgetExceeded&) {
    if (alpha.free_on) {
      return classifying_object_free(h, lambda, alpha, t);
    }
    throw;
  }
}

FinMap hat(const FinMap& h, const ClassifyingObject& co,
           const Algebra& gamma) {
  Verdict v =
      is_left_lambda_morphism(h, co.lambda_a, co.H, co.base, gamma);
  if (!v) {
    throw NotABimorphism("hat: input is not a lambda-morphism: " + v.witness);
  }
  // free extension gamma . T(h) : T(H(A)) -> C factors through q
  FinMap k_free = compose(gamma.structure1(), co.t.map(h));
  FinMap candidate = compose(k_free, co.section);
  if (!(compose(candidate, co.q) == k_free)) {
    throw NotAMorphism("hat: fill-in is not well-defined: " +
                       map_diff(compose(candidate, co.q), k_free));
  }
  if (!is_algebra_morphism(candidate, co.result, gamma)) {
    throw NotAMorphism("hat: fill-in is not an algebra morphism");
  }
  if (!(compose(candidate, co.u) == h)) {
    throw Error("hat: factorization through u fails");
  }
  return candidate;
}

FinMap unhat(const FinMap& k, const ClassifyingObject& co,
             const Algebra& gamma) {
  if (!is_algebra_morphism(k, co.result, gamma)) {
    throw NotAMorphism("unhat: input is not an algebra morphism");
  }
  FinMap h = compose(k, co.u);
  Verdict v = is_left_lambda_morphism(h, co.lambda_a, co.H, co.base, gamma);
  if (!v) {
    throw NotABimorphism("unhat: k . u is not a lambda-morphism: " + v.witness);
  }
  return h;
}

FinMap lift_on_morphisms(const NatFamily& lambda, const Mor& f,
                         const ClassifyingObject& co_src,
                         const ClassifyingObject& co_dst) {
  if (!is_algebra_morphism(f, co_src.base, co_dst.base)) {
    throw NotAMorphism("lift_on_morphisms: f is not an algebra morphism");
  }
  Verdict nat = naturality_square(lambda, f);
  if (!nat) {
    throw NaturalitySquareFails(nat.witness);
  }
  const MonadInstance& t = co_src.t;
  FinMap thf = t.map(co_src.H.map(f).single());
  FinMap target_leg = compose(co_dst.q, thf);  // T(H(A)) -> W'
  FinMap candidate = compose(target_leg, co_src.section);
  if (!(compose(candidate, co_src.q) == target_leg)) {
    throw Error("lift_on_morphisms: fill-in is not well-defined: " +
                map_diff(compose(candidate, co_src.q), target_leg));
  }
  if (!is_algebra_morphism(candidate, co_src.result, co_dst.result)) {
    throw Error("lift_on_morphisms: fill-in is not an algebra morphism");
  }
  return candidate;
}

FreeIso free_iso(const FunctorHandle& h, const NatFamily& lambda,
                 const MonadInstance& s, const MonadInstance& t,
                 const Obj& a0) {
  Algebra alpha = free_algebra(s, a0);
  // the free construction itself re-checks the Kleisli axioms at A0
  ClassifyingObject free_side = classifying_object_free(h, lambda, alpha, t);
  ClassifyingObject co = classifying_object(h, lambda, alpha, t);
  Algebra target = free_side.result;  // (T(H(A0)), mu)

  // forward: the fill-in of q_free through q; backward: q . T(H(eta)).
  FinMap forward = compose(free_side.q, co.section);
  if (!(compose(forward, co.q) == free_side.q)) {
    throw Error("free_iso: forward fill-in not well-defined");
  }
  FinMap backward = compose(co.q, free_side.section);
  if (!is_algebra_morphism(forward, co.result, target) ||
      !is_algebra_morphism(backward, target, co.result)) {
    throw Error("free_iso: transport maps are not algebra morphisms");
  }
  if (!(compose(forward, backward) == FinMap::identity(target.carrier1())) ||
      !(compose(backward, forward) ==
        FinMap::identity(co.result.carrier1()))) {
    throw Error("free_iso: transport maps are not mutually inverse");
  }
  return FreeIso{co, target, forward, backward};
}

NatFamily dst_family(const MonadInstance& t) {
  FunctorHandle prod = FunctorHandle::binary_product();
  MonadInstance tt = product_monad({t, t});
  NatFamily fam{
      "dst(" + t.name() + ")",
      FunctorHandle::composed(prod, FunctorHandle::monad_functor(tt)),
      FunctorHandle::composed(FunctorHandle::monad_functor(t), prod),
      [t](const Obj& a) {
        return Mor(dst(t, a.parts.at(0), a.parts.at(1)));
      }};
  return fam;
}

NatFamily coproduct_injection_family(const MonadInstance& t) {
  FunctorHandle cop = FunctorHandle::binary_coproduct();
  MonadInstance tt = product_monad({t, t});
  NatFamily fam{
      "[T(inl),T(inr)](" + t.name() + ")",
      FunctorHandle::composed(cop, FunctorHandle::monad_functor(tt)),
      FunctorHandle::composed(FunctorHandle::monad_functor(t), cop),
      [t](const Obj& a) {
        const FinSet& x = a.parts.at(0);
        const FinSet& y = a.parts.at(1);
        CoproductSet xy = coproduct(x, y);
        FinMap ti = t.map(xy.inj1());
        FinMap tj = t.map(xy.inj2());
        CoproductSet txty = coproduct(t.apply(x), t.apply(y));
        return Mor(txty.copair(ti, tj));
      }};
  return fam;
}

Algebra pair_algebra(const Algebra& alpha, const Algebra& beta) {
  if (alpha.monad.name() != beta.monad.name()) {
    throw MonadMismatch("pair_algebra: algebras of different monads");
  }
  MonadInstance tt = product_monad({alpha.monad, beta.monad});
  Algebra out{tt, Obj({alpha.carrier1(), beta.carrier1()}),
              Mor({alpha.structure1(), beta.structure1()}), std::nullopt};
  if (alpha.free_on && beta.free_on) {
    out.free_on = Obj({alpha.free_on->single(), beta.free_on->single()});
  }
  return out;
}

ClassifyingObject tensor(const Algebra& alpha, const Algebra& beta,
                         const MonadInstance& t) {
  ClassifyingObject co =
      classifying_object(FunctorHandle::binary_product(), dst_family(t),
                         pair_algebra(alpha, beta), t);
  CommutativityVerdict cv =
      is_commutative(t, {alpha.carrier1(), beta.carrier1()});
  if (!cv) {
    co.warning = "monad is not commutative on these carriers: " + cv.witness;
  }
  return co;
}

ClassifyingObject coproduct_lift(const Algebra& alpha, const Algebra& beta,
                                 const MonadInstance& t) {
  return classifying_object(FunctorHandle::binary_coproduct(),
                            coproduct_injection_family(t),
                            pair_algebra(alpha, beta), t);
}

std::vector<FinMap> enumerate_bimorphisms(const ClassifyingObject& co,
                                          const Algebra& gamma) {
  std::vector<FinMap> out;
  FinSet ha = co.H.apply(co.base.carrier).single();
  for (const auto& h : all_maps(ha, gamma.carrier1())) {
    if (is_left_lambda_morphism(h, co.lambda_a, co.H, co.base, gamma)) {
      out.push_back(h);
    }
  }
  return out;
}

}  // namespace bimorph
