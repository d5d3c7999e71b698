#include "bimorph/adjoint.hpp"

#include <algorithm>

namespace bimorph {

NatFamily monad_morphism_family(const MonadMorphism& sigma) {
  return NatFamily{sigma.name,
                   FunctorHandle::monad_functor(sigma.source),
                   FunctorHandle::monad_functor(sigma.target),
                   [sigma](const Obj& a) {
                     return Mor(sigma.component_at(a.single()));
                   }};
}

Algebra LiftedAdjunction::right_apply(const Algebra& beta) const {
  if (beta.monad.name() != sigma.target.name()) {
    throw MonadMismatch("right_apply expects an algebra of " +
                        sigma.target.name());
  }
  Algebra out = em_lift(FunctorHandle::identity(), law, beta, sigma.source);
  Verdict v = is_algebra(out);
  if (!v) {
    throw NotAnAlgebra("restricted algebra fails the axioms: " + v.witness);
  }
  return out;
}

ClassifyingObject LiftedAdjunction::left_apply(const Algebra& alpha) const {
  if (alpha.monad.name() != sigma.source.name()) {
    throw MonadMismatch("left_apply expects an algebra of " +
                        sigma.source.name());
  }
  return classifying_object(FunctorHandle::identity(), law, alpha,
                            sigma.target);
}

LawReport transpose_check(const MonadMorphism& sigma,
                          const std::vector<FinSet>& test_sets) {
  NatFamily fam = monad_morphism_family(sigma);
  FunctorHandle id = FunctorHandle::identity();
  std::vector<Obj> objects;
  objects.reserve(test_sets.size());
  for (const auto& s : test_sets) {
    objects.emplace_back(s);
  }
  LawReport em = is_em_law(fam, id, sigma.source, sigma.target, objects);
  LawReport kl = is_kleisli_law(fam, id, sigma.source, sigma.target, objects);
  LawReport merged;
  for (auto& c : em.checks) {
    c.name = "em:" + c.name;
    merged.add(std::move(c));
  }
  for (auto& c : kl.checks) {
    c.name = "kleisli:" + c.name;
    merged.add(std::move(c));
  }
  return merged;
}

LiftedAdjunction lift_adjunction(const MonadMorphism& sigma,
                                 const std::vector<FinSet>& test_sets) {
  LawReport report = transpose_check(sigma, test_sets);
  if (report.any_failed()) {
    throw KleisliAxiomFails("monad morphism fails its law checks:\n" +
                            report.summary());
  }
  return LiftedAdjunction{sigma, monad_morphism_family(sigma)};
}

LawReport verify_adjunction_bijection(const LiftedAdjunction& adj,
                                      const Algebra& alpha,
                                      const Algebra& beta) {
  LawReport report;
  Algebra restricted = adj.right_apply(beta);
  ClassifyingObject lifted = adj.left_apply(alpha);
  const std::string scope = "alpha size " +
                            std::to_string(alpha.carrier1().size) +
                            ", beta size " +
                            std::to_string(beta.carrier1().size);

  std::vector<FinMap> hom_s = enumerate_algebra_morphisms(alpha, restricted);
  std::vector<FinMap> hom_t =
      enumerate_algebra_morphisms(lifted.result, beta);
  if (hom_s.size() == hom_t.size()) {
    report.add(CheckResult::pass(
        "hom-count equality",
        scope + ": " + std::to_string(hom_s.size()) + " each"));
  } else {
    report.add(CheckResult::fail(
        "hom-count equality", scope + ": " + std::to_string(hom_s.size()) +
                                  " vs " + std::to_string(hom_t.size())));
  }

  // h in Hom_S(alpha, R(beta)) is exactly a sigma-morphism alpha =>
  // beta; transport across hat and check the image is a permutation of
  // Hom_T(L(alpha), beta).
  std::vector<std::vector<std::uint32_t>> images;
  bool all_ok = true;
  for (const auto& h : hom_s) {
    try {
      FinMap k = hat(h, lifted, beta);
      images.push_back(k.table);
      FinMap back = unhat(k, lifted, beta);
      if (!(back == h)) {
        report.add(CheckResult::fail("hat/unhat round trip",
                                     "transport is not inverted"));
        all_ok = false;
      }
    } catch (const Error& e) {
      report.add(CheckResult::fail("hat transport", e.what()));
      all_ok = false;
    }
  }
  if (all_ok) {
    report.add(CheckResult::pass("hat/unhat round trip", scope));
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  std::vector<std::vector<std::uint32_t>> target_tables;
  for (const auto& k : hom_t) {
    target_tables.push_back(k.table);
  }
  std::sort(target_tables.begin(), target_tables.end());
  if (images == target_tables) {
    report.add(CheckResult::pass("transport is a bijection", scope));
  } else {
    report.add(CheckResult::fail(
        "transport is a bijection",
        scope + ": image has " + std::to_string(images.size()) +
            " distinct morphisms, target has " +
            std::to_string(target_tables.size())));
  }
  return report;
}

LawReport verify_bijection_naturality(const LiftedAdjunction& adj,
                                      const Algebra& alpha,
                                      const Algebra& beta,
                                      const Algebra& beta2, const FinMap& g) {
  LawReport report;
  if (!is_algebra_morphism(g, beta, beta2)) {
    throw NotAMorphism("naturality probe g is not an algebra morphism");
  }
  Algebra restricted = adj.right_apply(beta);
  ClassifyingObject lifted = adj.left_apply(alpha);
  bool ok = true;
  for (const auto& h : enumerate_algebra_morphisms(alpha, restricted)) {
    FinMap lhs = compose(g, hat(h, lifted, beta));
    // R(g) has the same underlying map as g
    FinMap rhs = hat(compose(g, h), lifted, beta2);
    if (!(lhs == rhs)) {
      report.add(CheckResult::fail("bijection naturality in beta",
                                   "square fails for a morphism"));
      ok = false;
      break;
    }
  }
  if (ok) {
    report.add(CheckResult::pass("bijection naturality in beta"));
  }
  return report;
}

}  // namespace bimorph
