#include "bimorph/strength.hpp"

namespace bimorph {

namespace {

FinMap swap_map(const FinSet& a, const FinSet& b) {
  ProductSet ab = product(a, b);
  ProductSet ba = product(b, a);
  std::vector<std::uint32_t> t(ab.carrier.size);
  for (std::uint32_t x = 0; x < a.size; ++x) {
    for (std::uint32_t y = 0; y < b.size; ++y) {
      t[ab.pair_index(x, y)] = ba.pair_index(y, x);
    }
  }
  return FinMap(ab.carrier, ba.carrier, std::move(t));
}

}  // namespace

StrengthData canonical_strength(const MonadInstance& t) {
  if (t.arity() != 1) {
    throw TypeMismatch("canonical_strength: monad must have arity 1");
  }
  StrengthData sd{t, {}, {}};
  sd.st_at = [t](const FinSet& a, const FinSet& b) {
    FinSet tb = t.apply(b);
    ProductSet ab = product(a, b);
    ProductSet dom = product(a, tb);
    FinSet tab = t.apply(ab.carrier);
    std::vector<std::uint32_t> table(dom.carrier.size);
    for (std::uint32_t x = 0; x < a.size; ++x) {
      std::vector<std::uint32_t> pair_x(b.size);
      for (std::uint32_t y = 0; y < b.size; ++y) {
        pair_x[y] = ab.pair_index(x, y);
      }
      FinMap tf = t.map(FinMap(b, ab.carrier, std::move(pair_x)));
      for (std::uint32_t u = 0; u < tb.size; ++u) {
        table[dom.pair_index(x, u)] = tf(u);
      }
    }
    return FinMap(dom.carrier, tab, std::move(table));
  };
  auto st = sd.st_at;
  sd.st_co_at = [t, st](const FinSet& a, const FinSet& b) {
    // st' = T(swap) . st_{B,A} . swap
    FinSet ta = t.apply(a);
    return compose(t.map(swap_map(b, a)),
                   compose(st(b, a), swap_map(ta, b)));
  };
  return sd;
}

FinMap dst(const StrengthData& sd, const FinSet& a, const FinSet& b) {
  const MonadInstance& t = sd.monad;
  FinSet ta = t.apply(a);
  FinSet tb = t.apply(b);
  ProductSet ab = product(a, b);
  FinSet tab = t.apply(ab.carrier);
  ProductSet dom = product(ta, tb);
  FinMap st_co = sd.st_co_at(a, b);
  ProductSet st_co_dom = product(ta, b);
  std::vector<std::uint32_t> table(dom.carrier.size);
  for (std::uint32_t u = 0; u < ta.size; ++u) {
    // dst(u,-) = bind(b |-> st'(u,b))
    std::vector<std::uint32_t> col(b.size);
    for (std::uint32_t y = 0; y < b.size; ++y) {
      col[y] = st_co(st_co_dom.pair_index(u, y));
    }
    FinMap ext = t.kleisli_extend(FinMap(b, tab, std::move(col)), b, ab.carrier);
    for (std::uint32_t v = 0; v < tb.size; ++v) {
      table[dom.pair_index(u, v)] = ext(v);
    }
  }
  return FinMap(dom.carrier, tab, std::move(table));
}

FinMap dst_prime(const StrengthData& sd, const FinSet& a, const FinSet& b) {
  const MonadInstance& t = sd.monad;
  FinSet ta = t.apply(a);
  FinSet tb = t.apply(b);
  ProductSet ab = product(a, b);
  FinSet tab = t.apply(ab.carrier);
  ProductSet dom = product(ta, tb);
  FinMap st = sd.st_at(a, b);
  ProductSet st_dom = product(a, tb);
  std::vector<std::uint32_t> table(dom.carrier.size);
  for (std::uint32_t v = 0; v < tb.size; ++v) {
    // dst'(-,v) = bind(a |-> st(a,v))
    std::vector<std::uint32_t> col(a.size);
    for (std::uint32_t x = 0; x < a.size; ++x) {
      col[x] = st(st_dom.pair_index(x, v));
    }
    FinMap ext = t.kleisli_extend(FinMap(a, tab, std::move(col)), a, ab.carrier);
    for (std::uint32_t u = 0; u < ta.size; ++u) {
      table[dom.pair_index(u, v)] = ext(u);
    }
  }
  return FinMap(dom.carrier, tab, std::move(table));
}

FinMap dst(const MonadInstance& t, const FinSet& a, const FinSet& b) {
  return dst(canonical_strength(t), a, b);
}

FinMap dst_prime(const MonadInstance& t, const FinSet& a, const FinSet& b) {
  return dst_prime(canonical_strength(t), a, b);
}

namespace {

std::string map_witness(const FinMap& f, const FinMap& g) {
  for (std::uint32_t x = 0; x < f.dom.size; ++x) {
    if (f.table[x] != g.table[x]) {
      return "at " + f.dom.label(x) + "(#" + std::to_string(x) +
             "): " + f.cod.label(f.table[x]) + " vs " +
             g.cod.label(g.table[x]);
    }
  }
  return "(structurally unequal)";
}

CheckResult maps_equal(const std::string& name, const FinMap& lhs,
                       const FinMap& rhs) {
  if (lhs == rhs) {
    return CheckResult::pass(name);
  }
  return CheckResult::fail(name, map_witness(lhs, rhs));
}

}  // namespace

LawReport check_strength_axioms(const StrengthData& sd,
                                const std::vector<FinSet>& test_sets) {
  LawReport report;
  const MonadInstance& t = sd.monad;
  auto guarded = [&report](const std::string& name, auto&& body) {
    try {
      report.add(body());
    } catch (const SizeBudgetExceeded& e) {
      report.add(CheckResult::skipped(name, e.what()));
    }
  };

  const FinSet one(1, {"*"});

  for (const auto& a : test_sets) {
    const std::string at = " at A=" + std::to_string(a.size);
    guarded("strength-unit-object" + at, [&] {
      // T(l_A) . st_{1,A} = l_{T(A)} with l : 1 x X -> X
      FinSet ta = t.apply(a);
      ProductSet oa = product(one, a);
      ProductSet ota = product(one, ta);
      FinMap lhs = compose(t.map(oa.proj2()), sd.st_at(one, a));
      FinMap l_ta = ota.proj2();
      return maps_equal("strength-unit-object" + at, lhs, l_ta);
    });
    guarded("strength-eta" + at, [&] {
      // st . (id x eta) = eta on every A x B
      for (const auto& b : test_sets) {
        ProductSet ab = product(a, b);
        FinMap st = sd.st_at(a, b);
        FinMap eta_b = t.unit(b);
        FinMap eta_ab = t.unit(ab.carrier);
        ProductSet dom = product(a, t.apply(b));
        for (std::uint32_t x = 0; x < a.size; ++x) {
          for (std::uint32_t y = 0; y < b.size; ++y) {
            std::uint32_t got = st(dom.pair_index(x, eta_b(y)));
            std::uint32_t want = eta_ab(ab.pair_index(x, y));
            if (got != want) {
              return CheckResult::fail(
                  "strength-eta" + at,
                  "at (" + a.label(x) + "," + b.label(y) + "): " +
                      eta_ab.cod.label(got) + " vs " + eta_ab.cod.label(want));
            }
          }
        }
      }
      return CheckResult::pass("strength-eta" + at, "all B in test sets");
    });
    for (const auto& b : test_sets) {
      const std::string at2 = at + ",B=" + std::to_string(b.size);
      guarded("strength-mu" + at2, [&] {
        // st_{A,B} . (id x mu) = mu . T(st) . st_{A,T(B)}; the right leg
        // is evaluated as (a,w) |-> bind(t |-> st(a,t))(w).
        FinSet tb = t.apply(b);
        FinSet ttb = t.apply(tb);
        ProductSet ab = product(a, b);
        FinSet tab = t.apply(ab.carrier);
        FinMap st = sd.st_at(a, b);
        ProductSet st_dom = product(a, tb);
        FinMap mu_b = t.mult(b);
        for (std::uint32_t x = 0; x < a.size; ++x) {
          std::vector<std::uint32_t> col(tb.size);
          for (std::uint32_t u = 0; u < tb.size; ++u) {
            col[u] = st(st_dom.pair_index(x, u));
          }
          FinMap ext = t.kleisli_extend(FinMap(tb, tab, std::move(col)), tb,
                                        ab.carrier);
          for (std::uint32_t w = 0; w < ttb.size; ++w) {
            std::uint32_t lhs = st(st_dom.pair_index(x, mu_b(w)));
            std::uint32_t rhs = ext(w);
            if (lhs != rhs) {
              return CheckResult::fail(
                  "strength-mu" + at2,
                  "at (" + a.label(x) + "," + ttb.label(w) + "): " +
                      tab.label(lhs) + " vs " + tab.label(rhs));
            }
          }
        }
        return CheckResult::pass("strength-mu" + at2);
      });
      guarded("costrength-symmetry" + at2, [&] {
        // st'_{A,B} = T(swap) . st_{B,A} . swap
        FinSet ta = t.apply(a);
        ProductSet ba = product(b, a);
        ProductSet ab = product(a, b);
        std::vector<std::uint32_t> sw1(product(ta, b).carrier.size);
        ProductSet tab_dom = product(ta, b);
        ProductSet bta = product(b, ta);
        for (std::uint32_t u = 0; u < ta.size; ++u) {
          for (std::uint32_t y = 0; y < b.size; ++y) {
            sw1[tab_dom.pair_index(u, y)] = bta.pair_index(y, u);
          }
        }
        std::vector<std::uint32_t> sw2(ba.carrier.size);
        for (std::uint32_t y = 0; y < b.size; ++y) {
          for (std::uint32_t x = 0; x < a.size; ++x) {
            sw2[ba.pair_index(y, x)] = ab.pair_index(x, y);
          }
        }
        FinMap rhs = compose(
            t.map(FinMap(ba.carrier, ab.carrier, std::move(sw2))),
            compose(sd.st_at(b, a),
                    FinMap(tab_dom.carrier, bta.carrier, std::move(sw1))));
        return maps_equal("costrength-symmetry" + at2, sd.st_co_at(a, b), rhs);
      });
      for (const auto& c : test_sets) {
        const std::string at3 = at2 + ",C=" + std::to_string(c.size);
        guarded("strength-associativity" + at3, [&] {
          // T(assoc) . st_{AxB,C} = st_{A,BxC} . (id x st_{B,C}) . assoc
          FinSet tc = t.apply(c);
          ProductSet ab = product(a, b);
          ProductSet bc = product(b, c);
          ProductSet abc_l = product(ab.carrier, c);
          ProductSet abc_r = product(a, bc.carrier);
          std::vector<std::uint32_t> assoc(abc_l.carrier.size);
          for (std::uint32_t x = 0; x < a.size; ++x) {
            for (std::uint32_t y = 0; y < b.size; ++y) {
              for (std::uint32_t z = 0; z < c.size; ++z) {
                assoc[abc_l.pair_index(ab.pair_index(x, y), z)] =
                    abc_r.pair_index(x, bc.pair_index(y, z));
              }
            }
          }
          FinMap lhs = compose(
              t.map(FinMap(abc_l.carrier, abc_r.carrier, assoc)),
              sd.st_at(ab.carrier, c));
          // right leg, assembled pointwise on (A x B) x T(C)
          FinMap st_bc = sd.st_at(b, c);
          FinMap st_a_bc = sd.st_at(a, bc.carrier);
          ProductSet st_bc_dom = product(b, tc);
          ProductSet st_a_bc_dom = product(a, t.apply(bc.carrier));
          ProductSet dom = product(ab.carrier, tc);
          std::vector<std::uint32_t> rtab(dom.carrier.size);
          for (std::uint32_t x = 0; x < a.size; ++x) {
            for (std::uint32_t y = 0; y < b.size; ++y) {
              for (std::uint32_t w = 0; w < tc.size; ++w) {
                std::uint32_t inner = st_bc(st_bc_dom.pair_index(y, w));
                rtab[dom.pair_index(ab.pair_index(x, y), w)] =
                    st_a_bc(st_a_bc_dom.pair_index(x, inner));
              }
            }
          }
          FinMap rhs(dom.carrier, st_a_bc.cod, std::move(rtab));
          return maps_equal("strength-associativity" + at3, lhs, rhs);
        });
      }
    }
  }
  return report;
}

CommutativityVerdict is_commutative(const StrengthData& sd,
                                    const std::vector<FinSet>& test_sets) {
  CommutativityVerdict v;
  std::string checked;
  std::string skipped;
  for (const auto& a : test_sets) {
    for (const auto& b : test_sets) {
      std::string pair_desc =
          "(" + std::to_string(a.size) + "," + std::to_string(b.size) + ")";
      try {
        FinMap d = dst(sd, a, b);
        FinMap dp = dst_prime(sd, a, b);
        if (!(d == dp)) {
          for (std::uint32_t i = 0; i < d.dom.size; ++i) {
            if (d.table[i] != dp.table[i]) {
              v.commutative = false;
              v.witness = "at " + d.dom.label(i) + ": dst = " +
                          d.cod.label(d.table[i]) + ", dst' = " +
                          dp.cod.label(dp.table[i]);
              v.scope = "witness on pair " + pair_desc;
              return v;
            }
          }
        }
        checked += (checked.empty() ? "" : " ") + pair_desc;
      } catch (const SizeBudgetExceeded&) {
        skipped += (skipped.empty() ? "" : " ") + pair_desc;
      }
    }
  }
  v.scope = "checked " + (checked.empty() ? std::string("nothing") : checked);
  if (!skipped.empty()) {
    v.scope += "; skipped over budget: " + skipped;
  }
  return v;
}

CommutativityVerdict is_commutative(const MonadInstance& t,
                                    const std::vector<FinSet>& test_sets) {
  return is_commutative(canonical_strength(t), test_sets);
}

}  // namespace bimorph
