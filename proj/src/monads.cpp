#include "bimorph/monads.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace bimorph {

namespace {

std::string elem_ref(const FinSet& s, std::uint32_t i) {
  return s.label(i) + "(#" + std::to_string(i) + ")";
}

}  // namespace

void FiniteSemiring::validate() const {
  const std::uint32_t n = carrier.size;
  if (n == 0) {
    throw ValidationError("semiring " + name + ": empty carrier");
  }
  if (add.size() != static_cast<std::size_t>(n) * n ||
      mul.size() != static_cast<std::size_t>(n) * n) {
    throw ValidationError("semiring " + name + ": table size mismatch");
  }
  for (auto v : add) {
    if (v >= n) throw ValidationError("semiring " + name + ": add entry out of range");
  }
  for (auto v : mul) {
    if (v >= n) throw ValidationError("semiring " + name + ": mul entry out of range");
  }
  auto w = [&](std::uint32_t i) { return elem_ref(carrier, i); };
  for (std::uint32_t a = 0; a < n; ++a) {
    if (plus(zero, a) != a || plus(a, zero) != a) {
      throw ValidationError("semiring " + name + ": additive unit fails at " + w(a));
    }
    if (times(one, a) != a || times(a, one) != a) {
      throw ValidationError("semiring " + name + ": multiplicative unit fails at " + w(a));
    }
    if (times(zero, a) != zero || times(a, zero) != zero) {
      throw ValidationError("semiring " + name + ": zero does not annihilate " + w(a));
    }
    for (std::uint32_t b = 0; b < n; ++b) {
      if (plus(a, b) != plus(b, a)) {
        throw ValidationError("semiring " + name + ": addition not commutative at (" +
                              w(a) + "," + w(b) + ")");
      }
      for (std::uint32_t c = 0; c < n; ++c) {
        if (plus(plus(a, b), c) != plus(a, plus(b, c))) {
          throw ValidationError("semiring " + name + ": addition not associative at (" +
                                w(a) + "," + w(b) + "," + w(c) + ")");
        }
        if (times(times(a, b), c) != times(a, times(b, c))) {
          throw ValidationError("semiring " + name +
                                ": multiplication not associative at (" + w(a) + "," +
                                w(b) + "," + w(c) + ")");
        }
        if (times(a, plus(b, c)) != plus(times(a, b), times(a, c))) {
          throw ValidationError("semiring " + name + ": left distributivity fails at (" +
                                w(a) + "," + w(b) + "," + w(c) + ")");
        }
        if (times(plus(a, b), c) != plus(times(a, c), times(b, c))) {
          throw ValidationError("semiring " + name + ": right distributivity fails at (" +
                                w(a) + "," + w(b) + "," + w(c) + ")");
        }
      }
    }
  }
}

bool FiniteSemiring::multiplication_commutative() const {
  for (std::uint32_t a = 0; a < carrier.size; ++a) {
    for (std::uint32_t b = 0; b < carrier.size; ++b) {
      if (times(a, b) != times(b, a)) {
        return false;
      }
    }
  }
  return true;
}

void FiniteMonoid::validate() const {
  const std::uint32_t n = carrier.size;
  if (n == 0) {
    throw ValidationError("monoid " + name + ": empty carrier");
  }
  if (op.size() != static_cast<std::size_t>(n) * n) {
    throw ValidationError("monoid " + name + ": table size mismatch");
  }
  for (auto v : op) {
    if (v >= n) throw ValidationError("monoid " + name + ": op entry out of range");
  }
  auto w = [&](std::uint32_t i) { return elem_ref(carrier, i); };
  for (std::uint32_t a = 0; a < n; ++a) {
    if (times(unit, a) != a || times(a, unit) != a) {
      throw ValidationError("monoid " + name + ": unit law fails at " + w(a));
    }
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (times(times(a, b), c) != times(a, times(b, c))) {
          throw ValidationError("monoid " + name + ": not associative at (" + w(a) +
                                "," + w(b) + "," + w(c) + ")");
        }
      }
    }
  }
}

bool FiniteMonoid::commutative() const {
  for (std::uint32_t a = 0; a < carrier.size; ++a) {
    for (std::uint32_t b = 0; b < carrier.size; ++b) {
      if (times(a, b) != times(b, a)) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------
// Monad instances
// ---------------------------------------------------------------------

// The arity-1 primitives: object action, unit, and elementwise Kleisli
// bind. Morphism action and multiplication are derived from bind, which
// also keeps composites like dst evaluable without materializing the
// intermediate functor towers.
struct MonadInstance::Impl {
  std::string name;
  Kind kind = Kind::identity;
  std::size_t arity = 1;

  std::function<FinSet(const FinSet&)> on_object;
  std::function<std::uint32_t(const FinSet&, std::uint32_t)> unit_elem;
  // f_table : X -> T(Y) (indices into T(Y)); t is an element of T(X).
  std::function<std::uint32_t(const FinSet& x, const FinSet& y,
                              const std::vector<std::uint32_t>& f_table,
                              std::uint32_t t)>
      bind_elem;

  std::optional<FiniteSemiring> semiring;
  std::optional<FiniteMonoid> monoid;
  std::vector<MonadInstance> components;  // product monad only
};

const std::string& MonadInstance::name() const { return impl_->name; }
MonadInstance::Kind MonadInstance::kind() const { return impl_->kind; }
std::size_t MonadInstance::arity() const { return impl_->arity; }

const FiniteSemiring* MonadInstance::semiring() const {
  return impl_->semiring ? &*impl_->semiring : nullptr;
}
const FiniteMonoid* MonadInstance::monoid() const {
  return impl_->monoid ? &*impl_->monoid : nullptr;
}
const std::vector<MonadInstance>* MonadInstance::components() const {
  return impl_->kind == Kind::product ? &impl_->components : nullptr;
}

FinSet MonadInstance::apply(const FinSet& a) const {
  if (impl_->arity != 1) {
    throw TypeMismatch("monad " + impl_->name + " has arity " +
                       std::to_string(impl_->arity));
  }
  return impl_->on_object(a);
}

FinMap MonadInstance::unit(const FinSet& a) const {
  FinSet ta = apply(a);
  std::vector<std::uint32_t> t(a.size);
  for (std::uint32_t i = 0; i < a.size; ++i) {
    t[i] = impl_->unit_elem(a, i);
  }
  return FinMap(a, ta, std::move(t));
}

FinMap MonadInstance::kleisli_extend(const FinMap& f, const FinSet& x,
                                     const FinSet& y) const {
  FinSet tx = apply(x);
  FinSet ty = apply(y);
  if (f.dom.size != x.size || f.cod.size != ty.size) {
    throw TypeMismatch("kleisli_extend: expected a map " +
                       std::to_string(x.size) + " -> T(" +
                       std::to_string(y.size) + ")");
  }
  std::vector<std::uint32_t> t(tx.size);
  for (std::uint32_t i = 0; i < tx.size; ++i) {
    t[i] = impl_->bind_elem(x, y, f.table, i);
  }
  return FinMap(tx, ty, std::move(t));
}

FinMap MonadInstance::map(const FinMap& f) const {
  FinMap eta = unit(f.cod);
  return kleisli_extend(compose(eta, f), f.dom, f.cod);
}

FinMap MonadInstance::mult(const FinSet& a) const {
  // mu = bind(id : T(A) -> T(A))
  FinSet ta = apply(a);
  return kleisli_extend(FinMap::identity(ta), ta, a);
}

Obj MonadInstance::apply(const Obj& a) const {
  if (impl_->kind != Kind::product) {
    return Obj(apply(a.single()));
  }
  if (a.arity() != impl_->components.size()) {
    throw TypeMismatch("product monad " + impl_->name + ": arity mismatch");
  }
  std::vector<FinSet> parts;
  parts.reserve(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    parts.push_back(impl_->components[i].apply(a.parts[i]));
  }
  return Obj(std::move(parts));
}

Mor MonadInstance::map(const Mor& f) const {
  if (impl_->kind != Kind::product) {
    return Mor(map(f.single()));
  }
  if (f.arity() != impl_->components.size()) {
    throw TypeMismatch("product monad " + impl_->name + ": arity mismatch");
  }
  std::vector<FinMap> parts;
  parts.reserve(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) {
    parts.push_back(impl_->components[i].map(f.parts[i]));
  }
  return Mor(std::move(parts));
}

Mor MonadInstance::unit(const Obj& a) const {
  if (impl_->kind != Kind::product) {
    return Mor(unit(a.single()));
  }
  std::vector<FinMap> parts;
  parts.reserve(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    parts.push_back(impl_->components[i].unit(a.parts[i]));
  }
  return Mor(std::move(parts));
}

Mor MonadInstance::mult(const Obj& a) const {
  if (impl_->kind != Kind::product) {
    return Mor(mult(a.single()));
  }
  std::vector<FinMap> parts;
  parts.reserve(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    parts.push_back(impl_->components[i].mult(a.parts[i]));
  }
  return Mor(std::move(parts));
}

std::vector<std::uint32_t> MonadInstance::decode_sum(
    std::uint32_t elem, std::uint32_t base_size) const {
  const FiniteSemiring* s = semiring();
  if (s == nullptr) {
    throw TypeMismatch("decode_sum: not a semimodule monad");
  }
  std::vector<std::uint32_t> coeffs(base_size);
  for (std::uint32_t i = 0; i < base_size; ++i) {
    coeffs[i] = elem % s->carrier.size;
    elem /= s->carrier.size;
  }
  return coeffs;
}

std::uint32_t MonadInstance::encode_sum(
    const std::vector<std::uint32_t>& coeffs) const {
  const FiniteSemiring* s = semiring();
  if (s == nullptr) {
    throw TypeMismatch("encode_sum: not a semimodule monad");
  }
  std::uint32_t elem = 0;
  for (std::size_t i = coeffs.size(); i > 0; --i) {
    elem = elem * s->carrier.size + coeffs[i - 1];
  }
  return elem;
}

namespace {

constexpr std::uint32_t kLabelCap = 4096;

std::vector<std::string> formal_sum_labels(const FiniteSemiring& s,
                                           const FinSet& base,
                                           std::uint64_t total) {
  if (total > kLabelCap) {
    return {};
  }
  // base labels that could be misread inside a sum (iterated
  // applications produce labels like "0" or "a+b") get wrapped
  auto wrapped = [](std::string l) {
    if (l == "0" || l.find('+') != std::string::npos ||
        l.find('*') != std::string::npos) {
      return "(" + std::move(l) + ")";
    }
    return l;
  };
  std::vector<std::string> labels;
  labels.reserve(total);
  for (std::uint64_t e = 0; e < total; ++e) {
    std::uint64_t rest = e;
    std::string out;
    for (std::uint32_t i = 0; i < base.size; ++i) {
      std::uint32_t c = static_cast<std::uint32_t>(rest % s.carrier.size);
      rest /= s.carrier.size;
      if (c == s.zero) {
        continue;
      }
      if (!out.empty()) {
        out += "+";
      }
      if (c != s.one) {
        out += wrapped(s.carrier.label(c)) + "*";
      }
      out += wrapped(base.label(i));
    }
    labels.push_back(out.empty() ? "0" : out);
  }
  // pathological base labels could still collide; drop labels rather
  // than hand FinSet a non-injective list
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    return {};
  }
  return labels;
}

}  // namespace

MonadInstance identity_monad() {
  auto impl = std::make_shared<MonadInstance::Impl>();
  impl->name = "identity";
  impl->kind = MonadInstance::Kind::identity;
  impl->on_object = [](const FinSet& a) { return a; };
  impl->unit_elem = [](const FinSet&, std::uint32_t i) { return i; };
  impl->bind_elem = [](const FinSet&, const FinSet&,
                       const std::vector<std::uint32_t>& f,
                       std::uint32_t t) { return f[t]; };
  return MonadInstance(std::move(impl));
}

MonadInstance maybe_monad() {
  auto impl = std::make_shared<MonadInstance::Impl>();
  impl->name = "maybe";
  impl->kind = MonadInstance::Kind::maybe;
  impl->on_object = [](const FinSet& a) {
    std::uint64_t n = static_cast<std::uint64_t>(a.size) + 1;
    if (n > enumeration_budget()) {
      throw SizeBudgetExceeded("maybe: object size exceeds budget");
    }
    std::vector<std::string> labels;
    if (n <= kLabelCap) {
      labels.reserve(n);
      for (std::uint32_t i = 0; i < a.size; ++i) {
        labels.push_back(a.label(i));
      }
      std::string bot = "bot";
      while (std::find(labels.begin(), labels.end(), bot) != labels.end()) {
        bot += "'";  // iterated applications each get a fresh bottom
      }
      labels.push_back(std::move(bot));
    }
    return FinSet(static_cast<std::uint32_t>(n), std::move(labels));
  };
  impl->unit_elem = [](const FinSet&, std::uint32_t i) { return i; };
  impl->bind_elem = [](const FinSet& x, const FinSet& y,
                       const std::vector<std::uint32_t>& f, std::uint32_t t) {
    return t < x.size ? f[t] : y.size;  // bot maps to bot
  };
  return MonadInstance(std::move(impl));
}

MonadInstance writer_monad(FiniteMonoid m) {
  m.validate();
  auto impl = std::make_shared<MonadInstance::Impl>();
  impl->name = "writer(" + m.name + ")";
  impl->kind = MonadInstance::Kind::writer;
  impl->monoid = std::move(m);
  const FiniteMonoid& mm = *impl->monoid;
  impl->on_object = [&mm](const FinSet& a) {
    std::uint64_t n = checked_mul(mm.carrier.size, a.size);
    std::vector<std::string> labels;
    if (n <= kLabelCap) {
      labels.reserve(n);
      for (std::uint32_t w = 0; w < mm.carrier.size; ++w) {
        for (std::uint32_t i = 0; i < a.size; ++i) {
          labels.push_back("(" + mm.carrier.label(w) + "," + a.label(i) + ")");
        }
      }
    }
    return FinSet(static_cast<std::uint32_t>(n), std::move(labels));
  };
  impl->unit_elem = [&mm](const FinSet& a, std::uint32_t i) {
    return mm.unit * a.size + i;
  };
  impl->bind_elem = [&mm](const FinSet& x, const FinSet& y,
                          const std::vector<std::uint32_t>& f,
                          std::uint32_t t) {
    std::uint32_t w = t / x.size;
    std::uint32_t ft = f[t % x.size];
    std::uint32_t w2 = ft / y.size;
    return mm.times(w, w2) * y.size + ft % y.size;
  };
  return MonadInstance(std::move(impl));
}

MonadInstance semimodule_monad(FiniteSemiring s) {
  s.validate();
  auto impl = std::make_shared<MonadInstance::Impl>();
  impl->name = "semimodule(" + s.name + ")";
  impl->kind = MonadInstance::Kind::semimodule;
  impl->semiring = std::move(s);
  const FiniteSemiring& sr = *impl->semiring;
  impl->on_object = [&sr](const FinSet& a) {
    std::uint64_t n = checked_pow(sr.carrier.size, a.size);
    return FinSet(static_cast<std::uint32_t>(n),
                  formal_sum_labels(sr, a, n));
  };
  impl->unit_elem = [&sr](const FinSet&, std::uint32_t i) {
    // the trivial sum 1*a_i
    std::uint32_t e = sr.one;
    for (std::uint32_t k = 0; k < i; ++k) {
      e *= sr.carrier.size;
    }
    return e;
  };
  impl->bind_elem = [&sr](const FinSet& x, const FinSet& y,
                          const std::vector<std::uint32_t>& f,
                          std::uint32_t t) {
    // flatten sum of sums: sum_i s_i (sum_j s_ij b_j) = sum_j (sum_i s_i*s_ij) b_j
    const std::uint32_t base = sr.carrier.size;
    std::vector<std::uint32_t> acc(y.size, sr.zero);
    std::uint32_t rest = t;
    for (std::uint32_t i = 0; i < x.size; ++i) {
      std::uint32_t c = rest % base;
      rest /= base;
      if (c == sr.zero) {
        continue;
      }
      std::uint32_t inner = f[i];
      for (std::uint32_t j = 0; j < y.size; ++j) {
        std::uint32_t d = inner % base;
        inner /= base;
        if (d != sr.zero) {
          acc[j] = sr.plus(acc[j], sr.times(c, d));
        }
      }
    }
    std::uint32_t out = 0;
    for (std::size_t j = acc.size(); j > 0; --j) {
      out = out * base + acc[j - 1];
    }
    return out;
  };
  return MonadInstance(std::move(impl));
}

MonadInstance product_monad(std::vector<MonadInstance> components) {
  if (components.empty()) {
    throw TypeMismatch("product_monad: empty component list");
  }
  for (const auto& c : components) {
    if (c.arity() != 1) {
      throw TypeMismatch("product_monad: components must have arity 1");
    }
  }
  if (components.size() == 1) {
    return components.front();
  }
  auto impl = std::make_shared<MonadInstance::Impl>();
  std::string n = "product(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i > 0) n += ",";
    n += components[i].name();
  }
  impl->name = n + ")";
  impl->kind = MonadInstance::Kind::product;
  impl->arity = components.size();
  impl->components = std::move(components);
  return MonadInstance(std::move(impl));
}

// ---------------------------------------------------------------------
// Law checking
// ---------------------------------------------------------------------

namespace {

std::string obj_desc(const Obj& o) {
  std::string s = "(";
  for (std::size_t i = 0; i < o.arity(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(o.parts[i].size);
  }
  return s + ")";
}

// First pointwise difference between two parallel morphisms.
std::string mor_witness(const Mor& lhs, const Mor& rhs) {
  for (std::size_t p = 0; p < lhs.arity(); ++p) {
    const FinMap& f = lhs.parts[p];
    const FinMap& g = rhs.parts[p];
    for (std::uint32_t x = 0; x < f.dom.size; ++x) {
      if (f.table[x] != g.table[x]) {
        return "component " + std::to_string(p) + " at " +
               elem_ref(f.dom, x) + ": " + elem_ref(f.cod, f.table[x]) +
               " vs " + elem_ref(g.cod, g.table[x]);
      }
    }
  }
  return "(structurally unequal)";
}

CheckResult equal_or_fail(const std::string& name, const Mor& lhs,
                          const Mor& rhs, const std::string& scope) {
  if (lhs == rhs) {
    return CheckResult::pass(name, scope);
  }
  return CheckResult::fail(name, mor_witness(lhs, rhs));
}

}  // namespace

std::vector<Obj> tuple_objects(const MonadInstance& t,
                               const std::vector<FinSet>& test_sets) {
  std::vector<Obj> objs{Obj{}};
  for (std::size_t i = 0; i < t.arity(); ++i) {
    std::vector<Obj> next;
    next.reserve(objs.size() * test_sets.size());
    for (const auto& prefix : objs) {
      for (const auto& s : test_sets) {
        Obj o = prefix;
        o.parts.push_back(s);
        next.push_back(std::move(o));
      }
    }
    objs = std::move(next);
  }
  return objs;
}

LawReport check_monad_laws(const MonadInstance& t,
                           const std::vector<FinSet>& test_sets) {
  LawReport report;
  auto objs = tuple_objects(t, test_sets);
  auto guarded = [&report](const std::string& name, auto&& body) {
    try {
      report.add(body());
    } catch (const SizeBudgetExceeded& e) {
      report.add(CheckResult::skipped(name, e.what()));
    }
  };

  for (const auto& a : objs) {
    const std::string at = " at A=" + obj_desc(a);
    guarded("functor-identity" + at, [&] {
      return equal_or_fail("functor-identity" + at, t.map(Mor::identity(a)),
                           Mor::identity(t.apply(a)), "");
    });
    guarded("monad-left-unit" + at, [&] {
      Obj ta = t.apply(a);
      return equal_or_fail("monad-left-unit" + at,
                           compose(t.mult(a), t.unit(ta)), Mor::identity(ta),
                           "");
    });
    guarded("monad-right-unit" + at, [&] {
      Obj ta = t.apply(a);
      return equal_or_fail("monad-right-unit" + at,
                           compose(t.mult(a), t.map(t.unit(a))),
                           Mor::identity(ta), "");
    });
    guarded("monad-associativity" + at, [&] {
      Obj ta = t.apply(a);
      return equal_or_fail("monad-associativity" + at,
                           compose(t.mult(a), t.map(t.mult(a))),
                           compose(t.mult(a), t.mult(ta)), "");
    });
  }

  for (const auto& a : objs) {
    for (const auto& b : objs) {
      const std::string at = " at A=" + obj_desc(a) + ",B=" + obj_desc(b);
      guarded("unit-naturality" + at, [&] {
        for (const auto& f : all_mors(a, b)) {
          Mor lhs = compose(t.map(f), t.unit(a));
          Mor rhs = compose(t.unit(b), f);
          if (!(lhs == rhs)) {
            return CheckResult::fail("unit-naturality" + at,
                                     mor_witness(lhs, rhs));
          }
        }
        return CheckResult::pass("unit-naturality" + at, "all maps");
      });
      guarded("mult-naturality" + at, [&] {
        for (const auto& f : all_mors(a, b)) {
          Mor lhs = compose(t.mult(b), t.map(t.map(f)));
          Mor rhs = compose(t.map(f), t.mult(a));
          if (!(lhs == rhs)) {
            return CheckResult::fail("mult-naturality" + at,
                                     mor_witness(lhs, rhs));
          }
        }
        return CheckResult::pass("mult-naturality" + at, "all maps");
      });
      for (const auto& c : objs) {
        const std::string at3 =
            at + ",C=" + obj_desc(c);
        guarded("functor-composition" + at3, [&] {
          for (const auto& f : all_mors(a, b)) {
            for (const auto& g : all_mors(b, c)) {
              Mor lhs = t.map(compose(g, f));
              Mor rhs = compose(t.map(g), t.map(f));
              if (!(lhs == rhs)) {
                return CheckResult::fail("functor-composition" + at3,
                                         mor_witness(lhs, rhs));
              }
            }
          }
          return CheckResult::pass("functor-composition" + at3, "all pairs");
        });
      }
    }
  }
  return report;
}

LawReport check_monad_morphism(const MonadMorphism& sigma,
                               const std::vector<FinSet>& test_sets) {
  LawReport report;
  const MonadInstance& s = sigma.source;
  const MonadInstance& t = sigma.target;
  auto guarded = [&report](const std::string& name, auto&& body) {
    try {
      report.add(body());
    } catch (const SizeBudgetExceeded& e) {
      report.add(CheckResult::skipped(name, e.what()));
    }
  };

  for (const auto& a : test_sets) {
    const std::string at = " at A=" + std::to_string(a.size);
    guarded("morphism-unit" + at, [&] {
      return equal_or_fail("morphism-unit" + at,
                           Mor(compose(sigma.component_at(a), s.unit(a))),
                           Mor(t.unit(a)), "");
    });
    guarded("morphism-mult" + at, [&] {
      FinSet sa = s.apply(a);
      FinMap lhs = compose(sigma.component_at(a), s.mult(a));
      FinMap rhs = compose(t.mult(a), compose(t.map(sigma.component_at(a)),
                                              sigma.component_at(sa)));
      return equal_or_fail("morphism-mult" + at, Mor(lhs), Mor(rhs), "");
    });
    for (const auto& b : test_sets) {
      const std::string at2 =
          at + ",B=" + std::to_string(b.size);
      guarded("morphism-naturality" + at2, [&] {
        for (const auto& f : all_maps(a, b)) {
          FinMap lhs = compose(sigma.component_at(b), s.map(f));
          FinMap rhs = compose(t.map(f), sigma.component_at(a));
          if (!(lhs == rhs)) {
            return CheckResult::fail("morphism-naturality" + at2,
                                     mor_witness(Mor(lhs), Mor(rhs)));
          }
        }
        return CheckResult::pass("morphism-naturality" + at2, "all maps");
      });
    }
  }
  return report;
}

}  // namespace bimorph
