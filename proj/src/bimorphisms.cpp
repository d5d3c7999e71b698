#include "bimorph/bimorphisms.hpp"

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

Verdict maps_equal(const FinMap& lhs, const FinMap& rhs) {
  if (lhs == rhs) {
    return Verdict::pass();
  }
  return Verdict::fail(map_diff(lhs, rhs));
}

}  // namespace

Verdict is_left_lambda_morphism(const FinMap& h, const FinMap& lambda_a,
                                const FunctorHandle& H, const Algebra& alpha,
                                const Algebra& beta) {
  const MonadInstance& t = beta.monad;
  FinSet ha = H.apply(alpha.carrier).single();
  FinSet hsa = H.apply(alpha.monad.apply(alpha.carrier)).single();
  if (!(h.dom == ha) || !(h.cod == beta.carrier1())) {
    throw TypeMismatch("left lambda-morphism: h must have type H(A) -> B (" +
                       std::to_string(ha.size) + " -> " +
                       std::to_string(beta.carrier1().size) + ")");
  }
  if (!(lambda_a.dom == hsa) || !(lambda_a.cod == t.apply(ha))) {
    throw TypeMismatch(
        "left lambda-morphism: lambda must have type H(S(A)) -> T(H(A))");
  }
  FinMap lhs = compose(beta.structure1(), compose(t.map(h), lambda_a));
  FinMap rhs = compose(h, H.map(alpha.structure).single());
  return maps_equal(lhs, rhs);
}

Verdict is_right_rho_morphism(const Mor& h, const Mor& rho_b,
                              const FunctorHandle& G, const Algebra& alpha,
                              const Algebra& beta) {
  const MonadInstance& s = alpha.monad;
  const MonadInstance& t = beta.monad;
  Obj gb = G.apply(beta.carrier);
  if (!(h.dom() == alpha.carrier) || !(h.cod() == gb)) {
    throw TypeMismatch("right rho-morphism: h must have type A -> G(B)");
  }
  Obj sgb = s.apply(gb);
  Obj gtb = G.apply(t.apply(beta.carrier));
  if (!(rho_b.dom() == sgb) || !(rho_b.cod() == gtb)) {
    throw TypeMismatch(
        "right rho-morphism: rho must have type S(G(B)) -> G(T(B))");
  }
  Mor lhs = compose(G.map(beta.structure), compose(rho_b, s.map(h)));
  Mor rhs = compose(h, alpha.structure);
  if (lhs == rhs) {
    return Verdict::pass();
  }
  for (std::size_t p = 0; p < lhs.arity(); ++p) {
    if (!(lhs.parts[p] == rhs.parts[p])) {
      return Verdict::fail(map_diff(lhs.parts[p], rhs.parts[p]));
    }
  }
  return Verdict::fail("(structurally unequal)");
}

namespace {

// gamma . T(h) . connector = h . base, the shared shape of the three
// bilinearity squares.
Verdict bilinear_square(const FinMap& h, const MonadInstance& t,
                        const FinMap& connector, const FinMap& base,
                        const Algebra& gamma) {
  FinMap lhs = compose(gamma.structure1(), compose(t.map(h), connector));
  FinMap rhs = compose(h, base);
  return maps_equal(lhs, rhs);
}

}  // namespace

Verdict is_bilinear(const FinMap& h, const MonadInstance& t,
                    const Algebra& alpha, const Algebra& beta,
                    const Algebra& gamma) {
  const FinSet& a = alpha.carrier1();
  const FinSet& b = beta.carrier1();
  ProductSet ab = product(a, b);
  if (!(h.dom == ab.carrier) || !(h.cod == gamma.carrier1())) {
    throw TypeMismatch("is_bilinear: h must have type A x B -> C");
  }
  return bilinear_square(
      h, t, dst(t, a, b),
      ab.map(alpha.structure1(), beta.structure1()), gamma);
}

Verdict left_component(const FinMap& h, const MonadInstance& t,
                       const Algebra& alpha, const Algebra& beta,
                       const Algebra& gamma) {
  const FinSet& a = alpha.carrier1();
  const FinSet& b = beta.carrier1();
  ProductSet ab = product(a, b);
  StrengthData sd = canonical_strength(t);
  // A x T(B) --st--> T(A x B); base (id x beta)
  return bilinear_square(h, t, sd.st_at(a, b),
                         ab.map(FinMap::identity(a), beta.structure1()),
                         gamma);
}

Verdict right_component(const FinMap& h, const MonadInstance& t,
                        const Algebra& alpha, const Algebra& beta,
                        const Algebra& gamma) {
  const FinSet& a = alpha.carrier1();
  const FinSet& b = beta.carrier1();
  ProductSet ab = product(a, b);
  StrengthData sd = canonical_strength(t);
  return bilinear_square(h, t, sd.st_co_at(a, b),
                         ab.map(alpha.structure1(), FinMap::identity(b)),
                         gamma);
}

namespace {

std::string obj_sizes(const Obj& o) {
  std::string s = "(";
  for (std::size_t i = 0; i < o.arity(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(o.parts[i].size);
  }
  return s + ")";
}

CheckResult mors_equal_check(const std::string& name, const Mor& lhs,
                             const Mor& rhs) {
  if (lhs == rhs) {
    return CheckResult::pass(name);
  }
  for (std::size_t p = 0; p < lhs.arity(); ++p) {
    if (!(lhs.parts[p] == rhs.parts[p])) {
      return CheckResult::fail(name, map_diff(lhs.parts[p], rhs.parts[p]));
    }
  }
  return CheckResult::fail(name, "(structurally unequal)");
}

}  // namespace

LawReport is_kleisli_law(const NatFamily& lambda, const FunctorHandle& h,
                         const MonadInstance& s, const MonadInstance& t,
                         const std::vector<Obj>& test_objects) {
  LawReport report;
  auto guarded = [&report](const std::string& name, auto&& body) {
    try {
      report.add(body());
    } catch (const SizeBudgetExceeded& e) {
      report.add(CheckResult::skipped(name, e.what()));
    }
  };
  for (const auto& a : test_objects) {
    const std::string at = " at A=" + obj_sizes(a);
    guarded("kleisli-unit-axiom" + at, [&] {
      // lambda_A . H(eta_A) = eta_{H(A)}
      FinSet ha = h.apply(a).single();
      Mor lhs = compose(lambda.component_at(a), h.map(s.unit(a)));
      Mor rhs = Mor(t.unit(ha));
      return mors_equal_check("kleisli-unit-axiom" + at, lhs, rhs);
    });
    guarded("kleisli-mult-axiom" + at, [&] {
      // mu . T(lambda_A) . lambda_{S(A)} = lambda_A . H(mu_A); the left
      // side collapses to the Kleisli extension of lambda_A.
      FinSet ha = h.apply(a).single();
      Obj sa = s.apply(a);
      FinSet hsa = h.apply(sa).single();
      FinMap ext = t.kleisli_extend(lambda.component_at(a).single(), hsa, ha);
      Mor lhs = compose(Mor(ext), lambda.component_at(sa));
      Mor rhs = compose(lambda.component_at(a), h.map(s.mult(a)));
      return mors_equal_check("kleisli-mult-axiom" + at, lhs, rhs);
    });
    for (const auto& b : test_objects) {
      const std::string at2 = at + ",B=" + obj_sizes(b);
      guarded("kleisli-naturality" + at2, [&] {
        for (const auto& f : all_mors(a, b)) {
          // T(H(f)) . lambda_A = lambda_B . H(S(f))
          Mor lhs = compose(t.map(h.map(f)), lambda.component_at(a));
          Mor rhs = compose(lambda.component_at(b), h.map(s.map(f)));
          if (!(lhs == rhs)) {
            return mors_equal_check("kleisli-naturality" + at2, lhs, rhs);
          }
        }
        return CheckResult::pass("kleisli-naturality" + at2, "all maps");
      });
    }
  }
  return report;
}

LawReport is_em_law(const NatFamily& rho, const FunctorHandle& g,
                    const MonadInstance& s, const MonadInstance& t,
                    const std::vector<Obj>& test_objects) {
  LawReport report;
  auto guarded = [&report](const std::string& name, auto&& body) {
    try {
      report.add(body());
    } catch (const SizeBudgetExceeded& e) {
      report.add(CheckResult::skipped(name, e.what()));
    }
  };
  for (const auto& a : test_objects) {
    const std::string at = " at A=" + obj_sizes(a);
    guarded("em-unit-axiom" + at, [&] {
      // rho_A . eta^S_{G(A)} = G(eta^T_A)
      Obj ga = g.apply(a);
      Mor lhs = compose(rho.component_at(a), s.unit(ga));
      Mor rhs = g.map(t.unit(a));
      return mors_equal_check("em-unit-axiom" + at, lhs, rhs);
    });
    guarded("em-mult-axiom" + at, [&] {
      // rho_A . mu^S_{G(A)} = G(mu^T_A) . rho_{T(A)} . S(rho_A)
      Obj ga = g.apply(a);
      Obj ta = t.apply(a);
      Mor lhs = compose(rho.component_at(a), s.mult(ga));
      Mor rhs = compose(g.map(t.mult(a)),
                        compose(rho.component_at(ta), s.map(rho.component_at(a))));
      return mors_equal_check("em-mult-axiom" + at, lhs, rhs);
    });
    for (const auto& b : test_objects) {
      const std::string at2 = at + ",B=" + obj_sizes(b);
      guarded("em-naturality" + at2, [&] {
        for (const auto& f : all_mors(a, b)) {
          // G(T(f)) . rho_A = rho_B . S(G(f))
          Mor lhs = compose(g.map(t.map(f)), rho.component_at(a));
          Mor rhs = compose(rho.component_at(b), s.map(g.map(f)));
          if (!(lhs == rhs)) {
            return mors_equal_check("em-naturality" + at2, lhs, rhs);
          }
        }
        return CheckResult::pass("em-naturality" + at2, "all maps");
      });
    }
  }
  return report;
}

Mor kleisli_lift(const FunctorHandle& h, const NatFamily& lambda,
                 const Mor& f, const Obj& b) {
  // H(A) --H(f)--> H(S(B)) --lambda_B--> T(H(B))
  return compose(lambda.component_at(b), h.map(f));
}

FinMap kleisli_compose(const MonadInstance& s, const FinMap& g,
                       const FinMap& f, const FinSet& b, const FinSet& c) {
  // g * f = bind(g) . f for f : A -> S(B), g : B -> S(C)
  return compose(s.kleisli_extend(g, b, c), f);
}

Algebra em_lift(const FunctorHandle& g, const NatFamily& rho,
                const Algebra& beta, const MonadInstance& s) {
  Obj gb = g.apply(beta.carrier);
  Mor structure = compose(g.map(beta.structure), rho.component_at(beta.carrier));
  return Algebra{s, gb, structure, std::nullopt};
}

LawReport em_law_inverse_is_kleisli(const NatFamily& rho,
                                    const FunctorHandle& g,
                                    const MonadInstance& s,
                                    const MonadInstance& t,
                                    const std::vector<Obj>& test_objects) {
  // invert componentwise; NotInvertible names the failing component
  NatFamily inv{"inverse(" + rho.name + ")", rho.target, rho.source,
                [rho](const Obj& a) {
                  Mor comp = rho.component_at(a);
                  std::vector<FinMap> parts;
                  parts.reserve(comp.arity());
                  for (const auto& f : comp.parts) {
                    if (!f.is_bijective()) {
                      throw NotInvertible(
                          rho.name + " component at size " +
                          std::to_string(f.dom.size) + " is not bijective");
                    }
                    parts.push_back(f.inverse());
                  }
                  return Mor(std::move(parts));
                }};
  // the inverse of an EM law S.G => G.T is a Kleisli law G.T => S.G,
  // i.e. a Kleisli law for H = G from monad T to monad S
  for (const auto& a : test_objects) {
    inv.component_at(a);  // force NotInvertible before reporting laws
    inv.component_at(t.apply(a));
  }
  return is_kleisli_law(inv, g, t, s, test_objects);
}

ComposedBimorphism compose_bimorphisms(
    const FinMap& h, const FinMap& lambda_a, const FunctorHandle& H,
    const Algebra& alpha, const Algebra& beta, const FinMap& k,
    const NatFamily& lambda2, const FunctorHandle& G, const Algebra& gamma) {
  Verdict vh = is_left_lambda_morphism(h, lambda_a, H, alpha, beta);
  if (!vh) {
    throw NotABimorphism("compose_bimorphisms: first argument: " + vh.witness);
  }
  FinSet ha = H.apply(alpha.carrier).single();
  Verdict vk = is_left_lambda_morphism(
      k, lambda2.component(beta.carrier1()), G, beta, gamma);
  if (!vk) {
    throw NotABimorphism("compose_bimorphisms: second argument: " + vk.witness);
  }
  ComposedBimorphism out{compose(k, G.map(h)),
                         compose(lambda2.component(ha), G.map(lambda_a))};
  FunctorHandle gh = FunctorHandle::composed(G, H);
  Verdict v = is_left_lambda_morphism(out.morphism, out.mediator, gh, alpha,
                                      gamma);
  if (!v) {
    throw NotABimorphism("compose_bimorphisms: composite fails: " + v.witness);
  }
  return out;
}

LawReport nary_kleisli_law_check(const NatFamily& lambda,
                                 const FunctorHandle& h,
                                 const std::vector<MonadInstance>& sources,
                                 const MonadInstance& t,
                                 const std::vector<FinSet>& test_sets) {
  if (h.in_arity() != sources.size()) {
    throw TypeMismatch("nary_kleisli_law_check: functor arity " +
                       std::to_string(h.in_arity()) + " vs " +
                       std::to_string(sources.size()) + " source monads");
  }
  MonadInstance s = product_monad(sources);
  std::vector<Obj> objects = tuple_objects(s, test_sets);
  LawReport product_route = is_kleisli_law(lambda, h, s, t, objects);

  // direct route: the n-ary unit diagram uses H(eta_1,...,eta_n) and
  // the n-ary multiplication diagram uses H(mu_1,...,mu_n); with the
  // product monad these are the same componentwise morphisms, and the
  // agreement of both routes is asserted here.
  LawReport direct;
  for (const auto& a : objects) {
    std::vector<FinMap> units;
    std::vector<FinMap> mults;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      units.push_back(sources[i].unit(a.parts[i]));
      mults.push_back(sources[i].mult(a.parts[i]));
    }
    std::string at = " at A=" + obj_sizes(a);
    try {
      FinSet ha = h.apply(a).single();
      Mor lhs_u = compose(lambda.component_at(a), h.map(Mor(units)));
      direct.add(mors_equal_check("nary-unit-axiom" + at, lhs_u,
                                  Mor(t.unit(ha))));
      Obj sa = s.apply(a);
      FinSet hsa = h.apply(sa).single();
      FinMap ext = t.kleisli_extend(lambda.component_at(a).single(), hsa, ha);
      Mor lhs_m = compose(Mor(ext), lambda.component_at(sa));
      Mor rhs_m = compose(lambda.component_at(a), h.map(Mor(mults)));
      direct.add(mors_equal_check("nary-mult-axiom" + at, lhs_m, rhs_m));
    } catch (const SizeBudgetExceeded& e) {
      direct.add(CheckResult::skipped("nary-axioms" + at, e.what()));
    }
  }
  if (product_route.any_failed() != direct.any_failed()) {
    throw Error("n-ary Kleisli routes disagree");
  }
  LawReport merged = product_route;
  merged.merge(direct);
  return merged;
}

Verdict check_distributive_law_algebra(const NatFamily& lambda,
                                       const MonadInstance& s,
                                       const MonadInstance& t,
                                       const Algebra& alg_s,
                                       const Algebra& alg_t) {
  if (alg_t.monad.name() != t.name()) {
    throw MonadMismatch("distributive-law compatibility: alg_t is not a " +
                        t.name() + " algebra");
  }
  if (!(alg_s.carrier == alg_t.carrier)) {
    throw CarrierMismatch(
        "distributive-law compatibility needs a shared carrier (" +
        std::to_string(alg_s.carrier1().size) + " vs " +
        std::to_string(alg_t.carrier1().size) + ")");
  }
  // alpha^S is a left lambda-morphism alpha^T => alpha^T with H = S:
  // alpha^T . T(alpha^S) . lambda_A = alpha^S . S(alpha^T)
  return is_left_lambda_morphism(alg_s.structure1(),
                                 lambda.component(alg_t.carrier1()),
                                 FunctorHandle::monad_functor(s), alg_t,
                                 alg_t);
}

}  // namespace bimorph
