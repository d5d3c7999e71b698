// Acceptance checks: one line per criterion, exit status = number of
// failures. Each check is exhaustive over the stated desk-scale domain.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <vector>

#include "bimorph/adjoint.hpp"
#include "bimorph/fixtures.hpp"

using namespace bimorph;
namespace fx = bimorph::fixtures;

namespace {

int g_failures = 0;

void criterion(int n, const std::string& what,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << "criterion " << n << " [" << what << "]: "
            << (ok ? "PASS" : "FAIL") << " (" << ms << " ms)";
  if (!detail.empty()) {
    std::cout << "  -- " << detail;
  }
  std::cout << "\n";
  if (!ok) {
    ++g_failures;
  }
}

std::vector<Algebra> algebras_up_to(const MonadInstance& t, std::uint32_t n) {
  std::vector<Algebra> out;
  for (std::uint32_t k = 1; k <= n; ++k) {
    for (const Algebra& a : algebras_on(t, FinSet(k))) {
      out.push_back(a);
    }
  }
  return out;
}

NatFamily dst_prime_family(const MonadInstance& t) {
  NatFamily fam = dst_family(t);
  fam.name = "dst'";
  fam.component_at = [t](const Obj& a) {
    return Mor(dst_prime(t, a.parts.at(0), a.parts.at(1)));
  };
  return fam;
}

}  // namespace

int main() {
  auto sets2 = fx::test_sets(2);

  criterion(1, "monad law suite", [&](std::string& detail) {
    std::vector<MonadInstance> monads = {
        identity_monad(),
        maybe_monad(),
        writer_monad(fx::s3_monoid()),
        semimodule_monad(fx::boolean_semiring()),
        semimodule_monad(fx::f2()),
        semimodule_monad(fx::z4()),
        product_monad({semimodule_monad(fx::f2()),
                       semimodule_monad(fx::f2())})};
    std::size_t checked = 0, skipped = 0;
    for (const MonadInstance& t : monads) {
      LawReport r = check_monad_laws(t, sets2);
      if (r.any_failed()) {
        detail = t.name() + ": " + r.summary();
        return false;
      }
      for (const auto& c : r.checks) {
        (c.status == CheckResult::Status::skipped ? skipped : checked)++;
      }
    }
    detail = std::to_string(checked) + " checks passed, " +
             std::to_string(skipped) + " out-of-budget instances reported";
    return true;
  });

  criterion(2, "commutativity dichotomy", [&](std::string& detail) {
    for (const FiniteSemiring& s : {fx::boolean_semiring(), fx::f2(), fx::z4()}) {
      if (!is_commutative(semimodule_monad(s), sets2)) {
        detail = s.name + " reported non-commutative";
        return false;
      }
    }
    CommutativityVerdict tri =
        is_commutative(semimodule_monad(fx::bool_triangular()), sets2);
    CommutativityVerdict s3 =
        is_commutative(writer_monad(fx::s3_monoid()), sets2);
    if (tri.commutative || tri.witness.empty()) {
      detail = "triangular semiring: expected a witness";
      return false;
    }
    if (s3.commutative || s3.witness.empty()) {
      detail = "writer(s3): expected a witness";
      return false;
    }
    detail = "witnesses: " + tri.witness + " / " + s3.witness;
    return true;
  });

  criterion(3, "bilinearity equivalence", [&](std::string& detail) {
    MonadInstance t = semimodule_monad(fx::f2());
    std::size_t maps = 0;
    for (const Algebra& a : algebras_up_to(t, 2)) {
      for (const Algebra& b : algebras_up_to(t, 2)) {
        for (const Algebra& c : algebras_up_to(t, 2)) {
          ProductSet ab = product(a.carrier1(), b.carrier1());
          for (const FinMap& h : all_maps(ab.carrier, c.carrier1())) {
            bool one = static_cast<bool>(is_bilinear(h, t, a, b, c));
            bool two = static_cast<bool>(left_component(h, t, a, b, c));
            bool three = static_cast<bool>(right_component(h, t, a, b, c));
            if (one != (two && three)) {
              detail = "discrepancy on a map " +
                       std::to_string(ab.carrier.size) + " -> " +
                       std::to_string(c.carrier1().size);
              return false;
            }
            ++maps;
          }
        }
      }
    }
    detail = std::to_string(maps) + " maps, zero discrepancies";
    return true;
  });

  criterion(4, "universal bimorphism bijection", [&](std::string& detail) {
    std::size_t verified = 0;
    for (const FiniteSemiring& s : {fx::f2(), fx::boolean_semiring()}) {
      MonadInstance t = semimodule_monad(s);
      auto small = algebras_up_to(t, 2);
      auto targets = algebras_up_to(t, 4);
      for (const Algebra& a : small) {
        for (const Algebra& b : small) {
          ClassifyingObject co = tensor(a, b, t);
          for (const Algebra& gamma : targets) {
            auto bim = enumerate_bimorphisms(co, gamma);
            auto hom = enumerate_algebra_morphisms(co.result, gamma);
            if (bim.size() != hom.size()) {
              detail = s.name + ": counts " + std::to_string(bim.size()) +
                       " vs " + std::to_string(hom.size());
              return false;
            }
            for (const FinMap& h : bim) {
              if (!(unhat(hat(h, co, gamma), co, gamma) == h)) {
                detail = s.name + ": round trip failed";
                return false;
              }
            }
            for (const FinMap& k : hom) {
              if (!(hat(unhat(k, co, gamma), co, gamma) == k)) {
                detail = s.name + ": reverse round trip failed";
                return false;
              }
            }
            ++verified;
          }
        }
      }
    }
    detail = std::to_string(verified) + " (pair, target) instances";
    return true;
  });

  criterion(5, "free-construction isomorphism", [&](std::string& detail) {
    std::size_t squares = 0;
    for (const FiniteSemiring& s : {fx::f2(), fx::boolean_semiring()}) {
      MonadInstance t = semimodule_monad(s);
      MonadInstance tt = product_monad({t, t});
      NatFamily lam = dst_family(t);
      FunctorHandle h = FunctorHandle::binary_product();
      std::vector<Obj> bases = {Obj({FinSet(1), FinSet(1)}),
                                Obj({FinSet(1), FinSet(2)}),
                                Obj({FinSet(2), FinSet(1)})};
      std::vector<FreeIso> isos;
      for (const Obj& a0 : bases) {
        FreeIso iso = free_iso(h, lam, tt, t, a0);
        FinSet w = iso.co.result.carrier1();
        FinSet fr = iso.free_target.carrier1();
        if (w.size != fr.size ||
            !(compose(iso.backward, iso.forward) == FinMap::identity(w)) ||
            !(compose(iso.forward, iso.backward) == FinMap::identity(fr)) ||
            !is_algebra_morphism(iso.forward, iso.co.result,
                                 iso.free_target) ||
            !is_algebra_morphism(iso.backward, iso.free_target,
                                 iso.co.result)) {
          detail = s.name + ": transport maps are not inverse morphisms";
          return false;
        }
        isos.push_back(std::move(iso));
      }
      // naturality: forward' . L(f) = T(H(f)) . forward for base maps f
      for (std::size_t i = 0; i < bases.size(); ++i) {
        for (std::size_t j = 0; j < bases.size(); ++j) {
          for (const Mor& f : all_mors(bases[i], bases[j])) {
            // restrict to a sample but keep at least 5 distinct maps
            if (squares >= 12) {
              break;
            }
            Mor sf = tt.map(f);  // free-algebra morphism on each component
            FinMap lf = lift_on_morphisms(lam, sf, isos[i].co, isos[j].co);
            FinMap rhs = compose(t.map(h.map(f).single()), isos[i].forward);
            if (!(compose(isos[j].forward, lf) == rhs)) {
              detail = s.name + ": naturality square failed";
              return false;
            }
            ++squares;
          }
        }
      }
    }
    if (squares < 5) {
      detail = "only " + std::to_string(squares) + " naturality squares";
      return false;
    }
    detail = std::to_string(squares) + " naturality squares";
    return true;
  });

  criterion(6, "coproduct lifting", [&](std::string& detail) {
    MonadInstance t = semimodule_monad(fx::boolean_semiring());
    auto small = algebras_up_to(t, 2);
    auto targets = algebras_up_to(t, 4);
    std::size_t verified = 0;
    for (const Algebra& a : small) {
      for (const Algebra& b : small) {
        ClassifyingObject co = coproduct_lift(a, b, t);
        CoproductSet cp = coproduct(a.carrier1(), b.carrier1());
        FinMap u1 = compose(co.u, cp.inj1());
        FinMap u2 = compose(co.u, cp.inj2());
        for (const Algebra& gamma : targets) {
          auto hom = enumerate_algebra_morphisms(co.result, gamma);
          std::size_t fa = enumerate_algebra_morphisms(a, gamma).size();
          std::size_t fb = enumerate_algebra_morphisms(b, gamma).size();
          if (hom.size() != fa * fb) {
            detail = "hom-count " + std::to_string(hom.size()) + " vs " +
                     std::to_string(fa) + "*" + std::to_string(fb);
            return false;
          }
          // mediating uniqueness: restriction along the injections is
          // injective on Hom(a + b, gamma)
          std::set<std::vector<std::uint32_t>> restrictions;
          for (const FinMap& k : hom) {
            std::vector<std::uint32_t> key = compose(k, u1).table;
            const auto& right = compose(k, u2).table;
            key.insert(key.end(), right.begin(), right.end());
            restrictions.insert(std::move(key));
          }
          if (restrictions.size() != hom.size()) {
            detail = "two mediating morphisms share a restriction";
            return false;
          }
          ++verified;
        }
      }
    }
    detail = std::to_string(verified) + " (pair, target) instances";
    return true;
  });

  criterion(7, "tensor dimension over F2", [&](std::string& detail) {
    MonadInstance t = semimodule_monad(fx::f2());
    Algebra f1 = free_algebra(t, FinSet(1));
    Algebra f2r = free_algebra(t, FinSet(2));
    ClassifyingObject r11 = tensor(f1, f1, t);    // congruence route
    ClassifyingObject r12 = tensor(f1, f2r, t);
    if (r11.result.carrier1().size != 2 || r12.result.carrier1().size != 4) {
      detail = "carriers " + std::to_string(r11.result.carrier1().size) +
               ", " + std::to_string(r12.result.carrier1().size);
      return false;
    }
    // hom-count oracle against the free module of the matching rank
    for (const Algebra& gamma : algebras_up_to(t, 2)) {
      std::size_t via_w =
          enumerate_algebra_morphisms(r11.result, gamma).size();
      std::size_t via_free =
          enumerate_algebra_morphisms(f1, gamma).size();
      if (via_w != via_free) {
        detail = "rank-1 hom counts disagree";
        return false;
      }
      if (enumerate_bimorphisms(r11, gamma).size() != via_w) {
        detail = "bimorphism count disagrees with hom count";
        return false;
      }
    }
    detail = "|W(1,1)| = 2, |W(1,2)| = 4, oracle agrees";
    return true;
  });

  criterion(8, "adjoint lifting maybe => bool-module", [&](std::string& detail) {
    LiftedAdjunction adj = lift_adjunction(fx::maybe_to_bool_module(), sets2);
    auto alphas = algebras_up_to(adj.sigma.source, 3);
    auto betas = algebras_up_to(adj.sigma.target, 4);
    std::size_t instances = 0;
    for (const Algebra& alpha : alphas) {
      for (const Algebra& beta : betas) {
        LawReport r = verify_adjunction_bijection(adj, alpha, beta);
        if (r.any_failed()) {
          detail = r.summary();
          return false;
        }
        ++instances;
      }
    }
    // naturality spot checks on the two-element semilattices
    auto b2 = algebras_on(adj.sigma.target, FinSet(2));
    std::size_t squares = 0;
    for (const Algebra& alpha : algebras_on(adj.sigma.source, FinSet(2))) {
      for (const Algebra& b1 : b2) {
        for (const Algebra& bb : b2) {
          for (const FinMap& g : enumerate_algebra_morphisms(b1, bb)) {
            LawReport r = verify_bijection_naturality(adj, alpha, b1, bb, g);
            if (r.any_failed()) {
              detail = "naturality: " + r.summary();
              return false;
            }
            ++squares;
          }
        }
      }
    }
    detail = std::to_string(instances) + " hom-set bijections, " +
             std::to_string(squares) + " naturality squares";
    return true;
  });

  criterion(9, "Kleisli-law fixtures and mutations", [&](std::string& detail) {
    for (const FiniteSemiring& s : {fx::f2(), fx::boolean_semiring()}) {
      MonadInstance t = semimodule_monad(s);
      MonadInstance tt = product_monad({t, t});
      auto objects = tuple_objects(tt, sets2);
      for (const NatFamily& lam :
           {dst_family(t), dst_prime_family(t),
            coproduct_injection_family(t)}) {
        FunctorHandle h = lam.name.rfind("dst", 0) == 0
                              ? FunctorHandle::binary_product()
                              : FunctorHandle::binary_coproduct();
        LawReport r = is_kleisli_law(lam, h, tt, t, objects);
        if (!r.all_passed()) {
          detail = s.name + "/" + lam.name + ": " + r.summary();
          return false;
        }
        // mutations: swap two entries / collapse to a constant
        for (int mode = 0; mode < 2; ++mode) {
          NatFamily bad = lam;
          auto good = lam.component_at;
          bad.component_at = [good, mode](const Obj& o) {
            Mor m = good(o);
            FinMap& f = m.parts[0];
            if (mode == 0) {
              for (std::uint32_t i = 1; i < f.dom.size; ++i) {
                if (f.table[i] != f.table[0]) {
                  std::swap(f.table[0], f.table[i]);
                  break;
                }
              }
            } else {
              std::fill(f.table.begin(), f.table.end(), 0u);
            }
            return m;
          };
          LawReport br = is_kleisli_law(bad, h, tt, t, objects);
          bool witnessed = false;
          for (const auto& c : br.checks) {
            if (c.status == CheckResult::Status::fail && !c.detail.empty()) {
              witnessed = true;
            }
          }
          if (!br.any_failed() || !witnessed) {
            detail = s.name + "/" + lam.name + ": mutation " +
                     std::to_string(mode) + " not caught";
            return false;
          }
        }
      }
    }
    detail = "6 law fixtures pass, 12 mutations all caught with witnesses";
    return true;
  });

  criterion(10, "algebra axioms as bimorphism conditions",
            [&](std::string& detail) {
    FunctorHandle id = FunctorHandle::identity();
    std::size_t compared = 0;
    for (const MonadInstance& t :
         {identity_monad(), maybe_monad(), writer_monad(fx::z2_monoid()),
          writer_monad(fx::s3_monoid()),
          semimodule_monad(fx::boolean_semiring()),
          semimodule_monad(fx::f2())}) {
      for (std::uint32_t n = 1; n <= 2; ++n) {
        FinSet c(n);
        FinSet tc = t.apply(c);
        Algebra trivial_base =
            make_algebra(identity_monad(), c, FinMap::identity(c));
        Algebra free_base = free_algebra(t, c);
        for (const FinMap& cand : all_maps(tc, c)) {
          Algebra candidate = make_algebra(t, c, cand);
          // direct axiom checks
          bool unit_direct =
              compose(cand, t.unit(c)) == FinMap::identity(c);
          bool mult_direct = compose(cand, t.mult(c)) ==
                             compose(cand, t.map(cand));
          // unit axiom: id_A as a lambda-morphism along eta from the
          // identity-monad algebra (A, id) to (A, cand)
          bool unit_bimorph = static_cast<bool>(is_left_lambda_morphism(
              FinMap::identity(c), t.unit(c), id, trivial_base, candidate));
          // mult axiom: cand as a lambda-morphism along id_{T2(A)} from
          // the free algebra (T(A), mu) to (A, cand)
          bool mult_bimorph = static_cast<bool>(is_left_lambda_morphism(
              cand, FinMap::identity(t.apply(tc)), id, free_base, candidate));
          if (unit_direct != unit_bimorph || mult_direct != mult_bimorph) {
            detail = t.name() + " carrier " + std::to_string(n) +
                     ": encodings disagree";
            return false;
          }
          ++compared;
        }
      }
    }
    detail = std::to_string(compared) +
             " candidate structures, zero disagreements";
    return true;
  });

  std::cout << (g_failures == 0 ? "all criteria passed"
                                : std::to_string(g_failures) +
                                      " criteria failed")
            << "\n";
  return g_failures;
}
