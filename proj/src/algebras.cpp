#include "bimorph/algebras.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace bimorph {

namespace {

std::string first_difference(const Mor& lhs, const Mor& rhs) {
  for (std::size_t p = 0; p < lhs.arity(); ++p) {
    const FinMap& f = lhs.parts[p];
    const FinMap& g = rhs.parts[p];
    for (std::uint32_t x = 0; x < f.dom.size; ++x) {
      if (f.table[x] != g.table[x]) {
        return "at " + f.dom.label(x) + "(#" + std::to_string(x) +
               "): " + f.cod.label(f.table[x]) + " vs " +
               g.cod.label(g.table[x]);
      }
    }
  }
  return "(structurally unequal)";
}

}  // namespace

Algebra make_algebra(MonadInstance t, FinSet carrier, FinMap structure) {
  FinSet tc = t.apply(carrier);
  if (!(structure.dom == tc) || !(structure.cod == carrier)) {
    throw TypeMismatch("algebra structure map must have type T(carrier) -> "
                       "carrier; got " +
                       std::to_string(structure.dom.size) + " -> " +
                       std::to_string(structure.cod.size) + ", expected " +
                       std::to_string(tc.size) + " -> " +
                       std::to_string(carrier.size));
  }
  return Algebra{std::move(t), Obj(std::move(carrier)), Mor(std::move(structure)),
                 std::nullopt};
}

Verdict is_algebra(const Algebra& a) {
  Mor unit_leg = compose(a.structure, a.monad.unit(a.carrier));
  Mor id = Mor::identity(a.carrier);
  if (!(unit_leg == id)) {
    return Verdict::fail("unit axiom fails " + first_difference(unit_leg, id));
  }
  Mor mu_leg = compose(a.structure, a.monad.mult(a.carrier));
  Mor t_leg = compose(a.structure, a.monad.map(a.structure));
  if (!(mu_leg == t_leg)) {
    return Verdict::fail("multiplication axiom fails " +
                         first_difference(mu_leg, t_leg));
  }
  return Verdict::pass();
}

Algebra free_algebra(const MonadInstance& t, const Obj& a) {
  Algebra alg{t, t.apply(a), t.mult(a), a};
  return alg;
}

Algebra free_algebra(const MonadInstance& t, const FinSet& a) {
  return free_algebra(t, Obj(a));
}

bool is_algebra_morphism(const Mor& h, const Algebra& a, const Algebra& b) {
  if (a.monad.name() != b.monad.name()) {
    throw MonadMismatch("algebra morphism between algebras of " +
                        a.monad.name() + " and " + b.monad.name());
  }
  if (!(h.dom() == a.carrier) || !(h.cod() == b.carrier)) {
    throw TypeMismatch("algebra morphism candidate has wrong type");
  }
  return compose(h, a.structure) == compose(b.structure, a.monad.map(h));
}

bool is_algebra_morphism(const FinMap& h, const Algebra& a, const Algebra& b) {
  return is_algebra_morphism(Mor(h), a, b);
}

std::vector<FinMap> enumerate_algebra_morphisms(const Algebra& a,
                                                const Algebra& b) {
  std::vector<FinMap> out;
  for (const auto& h : all_maps(a.carrier1(), b.carrier1())) {
    if (is_algebra_morphism(h, a, b)) {
      out.push_back(h);
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// Partition / coequalizer
// ---------------------------------------------------------------------

Partition::Partition(std::uint32_t n) : parent_(n), classes_(n) {
  for (std::uint32_t i = 0; i < n; ++i) {
    parent_[i] = i;
  }
}

std::uint32_t Partition::find(std::uint32_t x) const {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool Partition::merge(std::uint32_t x, std::uint32_t y) {
  std::uint32_t rx = find(x);
  std::uint32_t ry = find(y);
  if (rx == ry) {
    return false;
  }
  // attach under the least index so roots are least representatives
  if (rx > ry) {
    std::swap(rx, ry);
  }
  parent_[ry] = rx;
  --classes_;
  return true;
}

FinMap Partition::quotient_map(const FinSet& carrier) const {
  std::vector<std::uint32_t> class_of(parent_.size());
  std::uint32_t next = 0;
  std::vector<std::string> labels;
  bool with_labels = carrier.has_labels() && classes_ <= 4096;
  for (std::uint32_t i = 0; i < parent_.size(); ++i) {
    if (find(i) == i) {
      class_of[i] = next++;
      if (with_labels) {
        labels.push_back("[" + carrier.label(i) + "]");
      }
    }
  }
  std::vector<std::uint32_t> table(parent_.size());
  for (std::uint32_t i = 0; i < parent_.size(); ++i) {
    table[i] = class_of[find(i)];
  }
  return FinMap(carrier, FinSet(classes_, std::move(labels)),
                std::move(table));
}

FinMap Partition::section_least(const FinSet& carrier) const {
  FinMap q = quotient_map(carrier);
  std::vector<std::uint32_t> table(classes_);
  for (std::uint32_t i = parent_.size(); i > 0; --i) {
    table[q(i - 1)] = i - 1;
  }
  return FinMap(q.cod, carrier, std::move(table));
}

FinMap Partition::section_greatest(const FinSet& carrier) const {
  FinMap q = quotient_map(carrier);
  std::vector<std::uint32_t> table(classes_);
  for (std::uint32_t i = 0; i < parent_.size(); ++i) {
    table[q(i)] = i;
  }
  return FinMap(q.cod, carrier, std::move(table));
}

CoequalizerResult coequalize_seeded(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& seeds,
    const Algebra& b) {
  const MonadInstance& t = b.monad;
  const FinSet& carrier = b.carrier1();
  const FinMap& beta = b.structure1();

  Partition part(carrier.size);
  for (const auto& [x, y] : seeds) {
    part.merge(x, y);
  }

  // Close under the algebra structure: identify beta-images of elements
  // of T(carrier) that become equal in T(quotient).
  bool changed = true;
  while (changed) {
    changed = false;
    FinMap q = part.quotient_map(carrier);
    FinMap tq = t.map(q);
    std::unordered_map<std::uint32_t, std::uint32_t> first_image;
    for (std::uint32_t e = 0; e < tq.dom.size; ++e) {
      auto [it, inserted] = first_image.try_emplace(tq(e), beta(e));
      if (!inserted && part.merge(it->second, beta(e))) {
        changed = true;
      }
    }
  }

  FinMap q = part.quotient_map(carrier);
  FinMap s_least = part.section_least(carrier);
  FinMap omega = compose(q, compose(beta, t.map(s_least)));
  // well-definedness across sections: at the fixpoint any two sections
  // give the same structure map
  FinMap s_greatest = part.section_greatest(carrier);
  FinMap omega_alt = compose(q, compose(beta, t.map(s_greatest)));
  if (!(omega == omega_alt)) {
    throw Error("quotient structure map is not well-defined: " +
                first_difference(Mor(omega), Mor(omega_alt)));
  }

  CoequalizerResult res{make_algebra(t, q.cod, omega), q, false};
  return res;
}

CoequalizerResult coequalize(const FinMap& f, const FinMap& g,
                             const Algebra& a, const Algebra& b) {
  if (!(f.dom == a.carrier1()) || !(g.dom == a.carrier1()) ||
      !(f.cod == b.carrier1()) || !(g.cod == b.carrier1())) {
    throw TypeMismatch("coequalize: parallel pair has wrong type");
  }
  if (!is_algebra_morphism(f, a, b)) {
    throw NotAMorphism("coequalize: first map is not an algebra morphism");
  }
  if (!is_algebra_morphism(g, a, b)) {
    throw NotAMorphism("coequalize: second map is not an algebra morphism");
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seeds;
  seeds.reserve(f.dom.size);
  for (std::uint32_t x = 0; x < f.dom.size; ++x) {
    seeds.emplace_back(f(x), g(x));
  }
  CoequalizerResult res = coequalize_seeded(seeds, b);
  // metadata only: look for a common section witnessing reflexivity
  try {
    for (const auto& s : all_maps(b.carrier1(), a.carrier1())) {
      FinMap fs = compose(f, s);
      if (fs == FinMap::identity(b.carrier1()) && compose(g, s) == fs) {
        res.reflexive_pair = true;
        break;
      }
    }
  } catch (const SizeBudgetExceeded&) {
    // unknown; leave false
  }
  return res;
}

// ---------------------------------------------------------------------
// Algebra enumeration
// ---------------------------------------------------------------------

std::vector<Algebra> enumerate_algebras_brute(const MonadInstance& t,
                                              const FinSet& carrier) {
  std::vector<Algebra> out;
  FinSet tc = t.apply(carrier);
  for (const auto& alpha : all_maps(tc, carrier)) {
    Algebra cand = make_algebra(t, carrier, alpha);
    if (is_algebra(cand)) {
      out.push_back(std::move(cand));
    }
  }
  return out;
}

std::vector<Algebra> enumerate_semimodule_algebras(const MonadInstance& t,
                                                   const FinSet& carrier) {
  const FiniteSemiring* sp = t.semiring();
  if (sp == nullptr) {
    throw TypeMismatch("enumerate_semimodule_algebras: not a semimodule monad");
  }
  const FiniteSemiring& s = *sp;
  const std::uint32_t n = carrier.size;
  std::vector<Algebra> out;
  if (n == 0) {
    return out;
  }
  FinSet tc = t.apply(carrier);
  std::set<std::vector<std::uint32_t>> seen;

  // scalar rows that are not forced by act(0,-) = const zero and
  // act(1,-) = id
  std::vector<std::uint32_t> free_scalars;
  for (std::uint32_t sc = 0; sc < s.carrier.size; ++sc) {
    if (sc != s.zero && sc != s.one) {
      free_scalars.push_back(sc);
    }
  }
  checked_pow(n, free_scalars.size() * n);  // action enumeration budget

  for (std::uint32_t zero = 0; zero < n; ++zero) {
    // free addition entries: unordered pairs of non-zero elements
    std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (x == zero) continue;
      for (std::uint32_t y = x; y < n; ++y) {
        if (y == zero) continue;
        slots.emplace_back(x, y);
      }
    }
    checked_pow(n, slots.size());
    std::vector<std::uint32_t> choice(slots.size(), 0);
    while (true) {
      std::vector<std::uint32_t> add(static_cast<std::size_t>(n) * n);
      for (std::uint32_t x = 0; x < n; ++x) {
        add[zero * n + x] = x;
        add[x * n + zero] = x;
      }
      for (std::size_t k = 0; k < slots.size(); ++k) {
        auto [x, y] = slots[k];
        add[x * n + y] = choice[k];
        add[y * n + x] = choice[k];
      }
      auto plus = [&](std::uint32_t x, std::uint32_t y) {
        return add[x * n + y];
      };
      bool assoc = true;
      for (std::uint32_t x = 0; x < n && assoc; ++x) {
        for (std::uint32_t y = 0; y < n && assoc; ++y) {
          for (std::uint32_t z = 0; z < n && assoc; ++z) {
            assoc = plus(plus(x, y), z) == plus(x, plus(y, z));
          }
        }
      }
      if (assoc) {
        // enumerate the unforced part of the scalar action
        std::vector<std::uint32_t> act(s.carrier.size * n);
        for (std::uint32_t x = 0; x < n; ++x) {
          act[s.zero * n + x] = zero;
          act[s.one * n + x] = x;
        }
        std::vector<std::uint32_t> act_choice(free_scalars.size() * n, 0);
        while (true) {
          for (std::size_t k = 0; k < act_choice.size(); ++k) {
            act[free_scalars[k / n] * n + k % n] = act_choice[k];
          }
          auto action = [&](std::uint32_t sc, std::uint32_t x) {
            return act[sc * n + x];
          };
          bool ok = true;
          for (std::uint32_t sc = 0; sc < s.carrier.size && ok; ++sc) {
            if (action(sc, zero) != zero) {
              ok = false;
            }
            for (std::uint32_t r = 0; r < s.carrier.size && ok; ++r) {
              for (std::uint32_t x = 0; x < n && ok; ++x) {
                ok = action(s.plus(sc, r), x) ==
                         plus(action(sc, x), action(r, x)) &&
                     action(s.times(sc, r), x) == action(sc, action(r, x));
              }
            }
            for (std::uint32_t x = 0; x < n && ok; ++x) {
              for (std::uint32_t y = 0; y < n && ok; ++y) {
                ok = action(sc, plus(x, y)) ==
                     plus(action(sc, x), action(sc, y));
              }
            }
          }
          if (ok) {
            // fold the candidate structure map over formal sums
            std::vector<std::uint32_t> alpha(tc.size);
            for (std::uint32_t e = 0; e < tc.size; ++e) {
              auto coeffs = t.decode_sum(e, n);
              std::uint32_t acc = zero;
              for (std::uint32_t i = 0; i < n; ++i) {
                acc = plus(acc, action(coeffs[i], i));
              }
              alpha[e] = acc;
            }
            if (seen.insert(alpha).second) {
              Algebra cand = make_algebra(t, carrier, FinMap(tc, carrier, alpha));
              if (is_algebra(cand)) {
                out.push_back(std::move(cand));
              }
            }
          }
          // increment act_choice
          std::size_t k = 0;
          for (; k < act_choice.size(); ++k) {
            if (++act_choice[k] < n) break;
            act_choice[k] = 0;
          }
          if (k == act_choice.size()) break;
        }
      }
      // increment choice
      std::size_t k = 0;
      for (; k < choice.size(); ++k) {
        if (++choice[k] < n) break;
        choice[k] = 0;
      }
      if (k == choice.size()) break;
    }
  }
  // deterministic order independent of the (zero, add, act) search path
  std::sort(out.begin(), out.end(), [](const Algebra& a, const Algebra& b) {
    return a.structure1().table < b.structure1().table;
  });
  return out;
}

std::vector<Algebra> algebras_on(const MonadInstance& t,
                                 const FinSet& carrier) {
  try {
    checked_pow(carrier.size, t.apply(carrier).size);
    return enumerate_algebras_brute(t, carrier);
  } catch (const SizeBudgetExceeded&) {
    if (t.kind() == MonadInstance::Kind::semimodule) {
      return enumerate_semimodule_algebras(t, carrier);
    }
    throw;
  }
}

}  // namespace bimorph
