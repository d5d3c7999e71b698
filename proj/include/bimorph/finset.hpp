#ifndef BIMORPH_FINSET_HPP_
#define BIMORPH_FINSET_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "bimorph/errors.hpp"

namespace bimorph {

// Budget guarding every exponential enumeration. Exceeding it raises
// SizeBudgetExceeded; nothing is ever silently truncated.
std::size_t enumeration_budget();
void set_enumeration_budget(std::size_t budget);

// budget-checked base^exp
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);
// budget-checked a*b
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

// A finite set. Elements are the indices 0..size-1; labels are display
// metadata only and never affect equality.
struct FinSet {
  std::uint32_t size = 0;
  std::vector<std::string> labels;  // empty, or exactly `size` entries

  FinSet() = default;
  explicit FinSet(std::uint32_t n) : size(n) {}
  FinSet(std::uint32_t n, std::vector<std::string> ls);

  bool has_labels() const { return !labels.empty(); }
  std::string label(std::uint32_t i) const;

  friend bool operator==(const FinSet& a, const FinSet& b) {
    return a.size == b.size;
  }
};

// A total map between finite sets, as a table of codomain indices.
struct FinMap {
  FinSet dom;
  FinSet cod;
  std::vector<std::uint32_t> table;  // table[x] < cod.size for all x

  FinMap() = default;
  FinMap(FinSet d, FinSet c, std::vector<std::uint32_t> t);

  std::uint32_t operator()(std::uint32_t x) const { return table[x]; }

  static FinMap identity(const FinSet& a);
  static FinMap constant(const FinSet& dom, const FinSet& cod,
                         std::uint32_t value);

  bool is_bijective() const;
  // Inverse of a bijection; throws NotInvertible otherwise.
  FinMap inverse() const;

  friend bool operator==(const FinMap& f, const FinMap& g) {
    return f.dom == g.dom && f.cod == g.cod && f.table == g.table;
  }
};

// g after f; throws DomainMismatch unless f.cod == g.dom.
FinMap compose(const FinMap& g, const FinMap& f);

// Cartesian product with a-major element order: index(a,b) = a*|B| + b.
struct ProductSet {
  FinSet a;
  FinSet b;
  FinSet carrier;

  std::uint32_t pair_index(std::uint32_t x, std::uint32_t y) const {
    return x * b.size + y;
  }
  std::pair<std::uint32_t, std::uint32_t> unpair(std::uint32_t i) const {
    return {i / b.size, i % b.size};
  }

  FinMap proj1() const;
  FinMap proj2() const;
  // The mediating map <f,g> : X -> A x B for f : X -> A, g : X -> B.
  FinMap pairing(const FinMap& f, const FinMap& g) const;
  // f x g : A' x B' -> A x B viewed from another product structure.
  FinMap map(const FinMap& f, const FinMap& g) const;
};

ProductSet product(const FinSet& a, const FinSet& b);

// Coproduct with the A-block first: inj1(x) = x, inj2(y) = |A| + y.
struct CoproductSet {
  FinSet a;
  FinSet b;
  FinSet carrier;

  FinMap inj1() const;
  FinMap inj2() const;
  // The copairing [f,g] : A + B -> X for f : A -> X, g : B -> X.
  FinMap copair(const FinMap& f, const FinMap& g) const;
  FinMap map(const FinMap& f, const FinMap& g) const;
};

CoproductSet coproduct(const FinSet& a, const FinSet& b);

// All |B|^|A| total maps A -> B in lexicographic table order.
// Throws SizeBudgetExceeded when the count exceeds the budget.
std::vector<FinMap> all_maps(const FinSet& a, const FinSet& b);

// An object/morphism of a finite power of the base category. Arity one
// is the base category itself; larger arities appear for product monads.
struct Obj {
  std::vector<FinSet> parts;

  Obj() = default;
  explicit Obj(FinSet s) : parts{std::move(s)} {}
  explicit Obj(std::vector<FinSet> ps) : parts(std::move(ps)) {}

  std::size_t arity() const { return parts.size(); }
  const FinSet& single() const;

  friend bool operator==(const Obj& a, const Obj& b) {
    return a.parts == b.parts;
  }
};

struct Mor {
  std::vector<FinMap> parts;

  Mor() = default;
  explicit Mor(FinMap f) : parts{std::move(f)} {}
  explicit Mor(std::vector<FinMap> fs) : parts(std::move(fs)) {}

  std::size_t arity() const { return parts.size(); }
  const FinMap& single() const;
  Obj dom() const;
  Obj cod() const;

  static Mor identity(const Obj& o);

  friend bool operator==(const Mor& a, const Mor& b) {
    return a.parts == b.parts;
  }
};

Mor compose(const Mor& g, const Mor& f);

// All tuples of maps between same-arity objects, lexicographic.
std::vector<Mor> all_mors(const Obj& a, const Obj& b);

}  // namespace bimorph

#endif  // BIMORPH_FINSET_HPP_
