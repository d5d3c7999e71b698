#include "bimorph/finset.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_set>

namespace bimorph {

namespace {
std::atomic<std::size_t> g_budget{1000000};
}  // namespace

std::size_t enumeration_budget() { return g_budget.load(); }

void set_enumeration_budget(std::size_t budget) { g_budget.store(budget); }

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t limit = g_budget.load();
  if (a != 0 && b > limit / a) {
    throw SizeBudgetExceeded("product " + std::to_string(a) + "*" +
                             std::to_string(b) + " exceeds budget " +
                             std::to_string(limit));
  }
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    result = checked_mul(result, base);
  }
  return result;
}

FinSet::FinSet(std::uint32_t n, std::vector<std::string> ls)
    : size(n), labels(std::move(ls)) {
  if (!labels.empty()) {
    if (labels.size() != size) {
      throw ValidationError("label count does not match set size");
    }
    std::unordered_set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) {
      throw ValidationError("labels are not pairwise distinct");
    }
  }
}

std::string FinSet::label(std::uint32_t i) const {
  if (i < labels.size()) {
    return labels[i];
  }
  return "e" + std::to_string(i);
}

FinMap::FinMap(FinSet d, FinSet c, std::vector<std::uint32_t> t)
    : dom(std::move(d)), cod(std::move(c)), table(std::move(t)) {
  if (table.size() != dom.size) {
    throw ValidationError("map table length " + std::to_string(table.size()) +
                          " does not match domain size " +
                          std::to_string(dom.size));
  }
  for (auto v : table) {
    if (v >= cod.size) {
      throw ValidationError("map table entry " + std::to_string(v) +
                            " out of codomain of size " +
                            std::to_string(cod.size));
    }
  }
}

FinMap FinMap::identity(const FinSet& a) {
  std::vector<std::uint32_t> t(a.size);
  for (std::uint32_t i = 0; i < a.size; ++i) {
    t[i] = i;
  }
  return FinMap(a, a, std::move(t));
}

FinMap FinMap::constant(const FinSet& dom, const FinSet& cod,
                        std::uint32_t value) {
  return FinMap(dom, cod, std::vector<std::uint32_t>(dom.size, value));
}

bool FinMap::is_bijective() const {
  if (dom.size != cod.size) {
    return false;
  }
  std::vector<bool> hit(cod.size, false);
  for (auto v : table) {
    if (hit[v]) {
      return false;
    }
    hit[v] = true;
  }
  return true;
}

FinMap FinMap::inverse() const {
  if (!is_bijective()) {
    throw NotInvertible("map is not bijective");
  }
  std::vector<std::uint32_t> t(cod.size);
  for (std::uint32_t x = 0; x < dom.size; ++x) {
    t[table[x]] = x;
  }
  return FinMap(cod, dom, std::move(t));
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (!(f.cod == g.dom)) {
    throw DomainMismatch("compose: codomain of size " +
                         std::to_string(f.cod.size) +
                         " does not match domain of size " +
                         std::to_string(g.dom.size));
  }
  std::vector<std::uint32_t> t(f.dom.size);
  for (std::uint32_t x = 0; x < f.dom.size; ++x) {
    t[x] = g.table[f.table[x]];
  }
  return FinMap(f.dom, g.cod, std::move(t));
}

namespace {
std::vector<std::string> product_labels(const FinSet& a, const FinSet& b) {
  std::uint64_t n = static_cast<std::uint64_t>(a.size) * b.size;
  if (n > 4096 || (!a.has_labels() && !b.has_labels())) {
    return {};
  }
  std::vector<std::string> ls;
  ls.reserve(n);
  for (std::uint32_t x = 0; x < a.size; ++x) {
    for (std::uint32_t y = 0; y < b.size; ++y) {
      ls.push_back("(" + a.label(x) + "," + b.label(y) + ")");
    }
  }
  return ls;
}
}  // namespace

ProductSet product(const FinSet& a, const FinSet& b) {
  std::uint64_t n = checked_mul(a.size, b.size);
  ProductSet p;
  p.a = a;
  p.b = b;
  p.carrier = FinSet(static_cast<std::uint32_t>(n), product_labels(a, b));
  return p;
}

FinMap ProductSet::proj1() const {
  std::vector<std::uint32_t> t(carrier.size);
  for (std::uint32_t i = 0; i < carrier.size; ++i) {
    t[i] = i / b.size;
  }
  return FinMap(carrier, a, std::move(t));
}

FinMap ProductSet::proj2() const {
  std::vector<std::uint32_t> t(carrier.size);
  for (std::uint32_t i = 0; i < carrier.size; ++i) {
    t[i] = i % b.size;
  }
  return FinMap(carrier, b, std::move(t));
}

FinMap ProductSet::pairing(const FinMap& f, const FinMap& g) const {
  if (!(f.dom == g.dom) || !(f.cod == a) || !(g.cod == b)) {
    throw DomainMismatch("pairing: component types do not match the product");
  }
  std::vector<std::uint32_t> t(f.dom.size);
  for (std::uint32_t x = 0; x < f.dom.size; ++x) {
    t[x] = pair_index(f.table[x], g.table[x]);
  }
  return FinMap(f.dom, carrier, std::move(t));
}

FinMap ProductSet::map(const FinMap& f, const FinMap& g) const {
  if (!(f.cod == a) || !(g.cod == b)) {
    throw DomainMismatch("product map: codomains do not match the product");
  }
  ProductSet src = product(f.dom, g.dom);
  std::vector<std::uint32_t> t(src.carrier.size);
  for (std::uint32_t x = 0; x < f.dom.size; ++x) {
    for (std::uint32_t y = 0; y < g.dom.size; ++y) {
      t[src.pair_index(x, y)] = pair_index(f.table[x], g.table[y]);
    }
  }
  return FinMap(src.carrier, carrier, std::move(t));
}

namespace {
std::vector<std::string> coproduct_labels(const FinSet& a, const FinSet& b) {
  std::uint64_t n = static_cast<std::uint64_t>(a.size) + b.size;
  if (n > 4096 || (!a.has_labels() && !b.has_labels())) {
    return {};
  }
  std::vector<std::string> ls;
  ls.reserve(n);
  for (std::uint32_t x = 0; x < a.size; ++x) {
    ls.push_back("inl(" + a.label(x) + ")");
  }
  for (std::uint32_t y = 0; y < b.size; ++y) {
    ls.push_back("inr(" + b.label(y) + ")");
  }
  return ls;
}
}  // namespace

CoproductSet coproduct(const FinSet& a, const FinSet& b) {
  std::uint64_t n = static_cast<std::uint64_t>(a.size) + b.size;
  if (n > enumeration_budget()) {
    throw SizeBudgetExceeded("coproduct size exceeds budget");
  }
  CoproductSet c;
  c.a = a;
  c.b = b;
  c.carrier = FinSet(static_cast<std::uint32_t>(n), coproduct_labels(a, b));
  return c;
}

FinMap CoproductSet::inj1() const {
  std::vector<std::uint32_t> t(a.size);
  for (std::uint32_t i = 0; i < a.size; ++i) {
    t[i] = i;
  }
  return FinMap(a, carrier, std::move(t));
}

FinMap CoproductSet::inj2() const {
  std::vector<std::uint32_t> t(b.size);
  for (std::uint32_t i = 0; i < b.size; ++i) {
    t[i] = a.size + i;
  }
  return FinMap(b, carrier, std::move(t));
}

FinMap CoproductSet::copair(const FinMap& f, const FinMap& g) const {
  if (!(f.dom == a) || !(g.dom == b) || !(f.cod == g.cod)) {
    throw DomainMismatch("copair: component types do not match the coproduct");
  }
  std::vector<std::uint32_t> t;
  t.reserve(carrier.size);
  t.insert(t.end(), f.table.begin(), f.table.end());
  t.insert(t.end(), g.table.begin(), g.table.end());
  return FinMap(carrier, f.cod, std::move(t));
}

FinMap CoproductSet::map(const FinMap& f, const FinMap& g) const {
  if (!(f.cod == a) || !(g.cod == b)) {
    throw DomainMismatch("coproduct map: codomains do not match");
  }
  CoproductSet src = coproduct(f.dom, g.dom);
  std::vector<std::uint32_t> t(src.carrier.size);
  for (std::uint32_t x = 0; x < f.dom.size; ++x) {
    t[x] = f.table[x];
  }
  for (std::uint32_t y = 0; y < g.dom.size; ++y) {
    t[f.dom.size + y] = a.size + g.table[y];
  }
  return FinMap(src.carrier, carrier, std::move(t));
}

std::vector<FinMap> all_maps(const FinSet& a, const FinSet& b) {
  if (a.size == 0) {
    return {FinMap(a, b, {})};
  }
  if (b.size == 0) {
    return {};  // no total map into the empty set from a nonempty one
  }
  std::uint64_t count = checked_pow(b.size, a.size);
  std::vector<FinMap> maps;
  maps.reserve(count);
  std::vector<std::uint32_t> table(a.size, 0);
  while (true) {
    maps.emplace_back(a, b, table);
    // lexicographic increment, last entry fastest
    std::size_t i = a.size;
    while (i > 0) {
      --i;
      if (++table[i] < b.size) {
        break;
      }
      table[i] = 0;
      if (i == 0) {
        return maps;
      }
    }
  }
}

const FinSet& Obj::single() const {
  if (parts.size() != 1) {
    throw TypeMismatch("expected an arity-1 object, got arity " +
                       std::to_string(parts.size()));
  }
  return parts.front();
}

const FinMap& Mor::single() const {
  if (parts.size() != 1) {
    throw TypeMismatch("expected an arity-1 morphism, got arity " +
                       std::to_string(parts.size()));
  }
  return parts.front();
}

Obj Mor::dom() const {
  std::vector<FinSet> ps;
  ps.reserve(parts.size());
  for (const auto& f : parts) {
    ps.push_back(f.dom);
  }
  return Obj(std::move(ps));
}

Obj Mor::cod() const {
  std::vector<FinSet> ps;
  ps.reserve(parts.size());
  for (const auto& f : parts) {
    ps.push_back(f.cod);
  }
  return Obj(std::move(ps));
}

Mor Mor::identity(const Obj& o) {
  std::vector<FinMap> fs;
  fs.reserve(o.parts.size());
  for (const auto& s : o.parts) {
    fs.push_back(FinMap::identity(s));
  }
  return Mor(std::move(fs));
}

Mor compose(const Mor& g, const Mor& f) {
  if (g.arity() != f.arity()) {
    throw DomainMismatch("compose: arity mismatch");
  }
  std::vector<FinMap> fs;
  fs.reserve(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) {
    fs.push_back(compose(g.parts[i], f.parts[i]));
  }
  return Mor(std::move(fs));
}

std::vector<Mor> all_mors(const Obj& a, const Obj& b) {
  if (a.arity() != b.arity()) {
    throw DomainMismatch("all_mors: arity mismatch");
  }
  std::vector<Mor> result{Mor{}};
  for (std::size_t i = 0; i < a.arity(); ++i) {
    auto component = all_maps(a.parts[i], b.parts[i]);
    std::vector<Mor> next;
    checked_mul(result.size(), std::max<std::size_t>(component.size(), 1));
    next.reserve(result.size() * component.size());
    for (const auto& prefix : result) {
      for (const auto& f : component) {
        Mor m = prefix;
        m.parts.push_back(f);
        next.push_back(std::move(m));
      }
    }
    result = std::move(next);
  }
  return result;
}

}  // namespace bimorph
