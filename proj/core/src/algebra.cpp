#include "mvsep/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mvsep {

namespace {

void requireSameLength(const Element& a, const Element& b) {
  if (a.size() != b.size()) {
    throw AlgebraError("elements of different lengths: " + a.str() + " and " + b.str());
  }
}

template <typename F>
Element zipWith(const Element& a, const Element& b, F f) {
  requireSameLength(a, b);
  Element out;
  out.coords.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.coords.push_back(f(a[i], b[i]));
  return out;
}

Element requireBoolean(const FiniteMV& algebra, Element x) {
  if (!isBoolean(algebra, x)) {
    throw AlgebraError("cannot split along non-Boolean element " + x.str());
  }
  return x;
}

std::string joinIndices(std::span<const std::size_t> xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + "]";
}

}  // namespace

std::string Element::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += coords[i].str();
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.str(); }

// ---------------------------------------------------------------------------
// FiniteMV

FiniteMV::FiniteMV(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  for (auto m : orders_) {
    if (m < 1) throw AlgebraError("chain orders must be at least 1, got " + std::to_string(m));
  }
}

FiniteMV FiniteMV::boolean(std::size_t atoms) {
  return FiniteMV{std::vector<std::int64_t>(atoms, 1)};
}

std::uint64_t FiniteMV::cardinality() const {
  std::uint64_t n = 1;
  for (auto m : orders_) {
    if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(m + 1), &n) ||
        n > (std::uint64_t{1} << 62)) {
      throw std::overflow_error("carrier of " + str() + " is too large to count");
    }
  }
  return n;
}

FiniteMV FiniteMV::canonical() const {
  auto sorted = orders_;
  std::sort(sorted.begin(), sorted.end());
  return FiniteMV{std::move(sorted)};
}

bool FiniteMV::isomorphicTo(const FiniteMV& other) const {
  return canonical() == other.canonical();
}

bool FiniteMV::contains(const Element& e) const {
  if (e.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] % e[i].den() != 0) return false;
  }
  return true;
}

void FiniteMV::require(const Element& e) const {
  if (!contains(e)) throw AlgebraError("element " + e.str() + " is not in " + str());
}

Element FiniteMV::zero() const { return Element{std::vector<Fraction>(orders_.size())}; }

Element FiniteMV::one() const {
  return Element{std::vector<Fraction>(orders_.size(), Fraction::one())};
}

Element FiniteMV::element(std::vector<Fraction> coords) const {
  Element e{std::move(coords)};
  require(e);
  return e;
}

Element FiniteMV::constant(const Fraction& c) const {
  return element(std::vector<Fraction>(orders_.size(), c));
}

std::vector<Element> FiniteMV::elements(std::uint64_t limit) const {
  if (cardinality() > limit) {
    throw std::length_error("carrier of " + str() + " exceeds enumeration limit");
  }
  std::vector<Element> out;
  out.reserve(cardinality());
  std::vector<std::int64_t> digits(orders_.size(), 0);
  while (true) {
    Element e;
    e.coords.reserve(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) e.coords.emplace_back(digits[i], orders_[i]);
    out.push_back(std::move(e));
    // Odometer with the last coordinate fastest gives lexicographic order.
    std::size_t i = orders_.size();
    while (i > 0) {
      --i;
      if (digits[i] < orders_[i]) {
        ++digits[i];
        break;
      }
      digits[i] = 0;
      if (i == 0) return out;
    }
    if (orders_.empty()) return out;
  }
}

std::vector<Element> FiniteMV::booleanElements(std::uint64_t limit) const {
  const std::size_t k = orders_.size();
  if (k >= 63 || (std::uint64_t{1} << k) > limit) {
    throw std::length_error(str() + " has too many Boolean elements to list");
  }
  std::vector<Element> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Element e;
    e.coords.reserve(k);
    // Coordinate 0 is the most significant bit, so masks ascend lexicographically.
    for (std::size_t i = 0; i < k; ++i) {
      bool bit = (mask >> (k - 1 - i)) & 1U;
      e.coords.push_back(bit ? Fraction::one() : Fraction::zero());
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string FiniteMV::str() const {
  if (orders_.empty()) return "terminal";
  std::string s;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += "×";
    s += "Ł" + std::to_string(orders_[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const FiniteMV& a) { return os << a.str(); }

// ---------------------------------------------------------------------------
// Operations

std::size_t arity(Op op) { return op == Op::kNeg ? 1 : 2; }

const char* symbol(Op op) {
  switch (op) {
    case Op::kOplus: return "+";
    case Op::kNeg: return "!";
    case Op::kOdot: return "*";
    case Op::kJoin: return "v";
    case Op::kMeet: return "^";
  }
  return "?";
}

Element oplus(const Element& a, const Element& b) { return zipWith(a, b, truncatedSum); }

Element neg(const Element& a) {
  Element out;
  out.coords.reserve(a.size());
  for (const auto& x : a.coords) out.coords.push_back(complement(x));
  return out;
}

Element odot(const Element& a, const Element& b) { return zipWith(a, b, truncatedProduct); }

Element join(const Element& a, const Element& b) {
  return zipWith(a, b, [](const Fraction& x, const Fraction& y) { return std::max(x, y); });
}

Element meet(const Element& a, const Element& b) {
  return zipWith(a, b, [](const Fraction& x, const Fraction& y) { return std::min(x, y); });
}

bool lessEq(const Element& a, const Element& b) {
  requireSameLength(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Element applyOperation(const FiniteMV& algebra, Op op, std::span<const Element> args) {
  if (args.size() != arity(op)) {
    throw AlgebraError(std::string("operation '") + symbol(op) + "' expects " +
                       std::to_string(arity(op)) + " argument(s), got " +
                       std::to_string(args.size()));
  }
  for (const auto& a : args) algebra.require(a);
  switch (op) {
    case Op::kOplus: return oplus(args[0], args[1]);
    case Op::kNeg: return neg(args[0]);
    case Op::kOdot: return odot(args[0], args[1]);
    case Op::kJoin: return join(args[0], args[1]);
    case Op::kMeet: return meet(args[0], args[1]);
  }
  throw AlgebraError("unknown operation");
}

bool isBoolean(const FiniteMV& algebra, const Element& a) {
  algebra.require(a);
  return oplus(a, a) == a;
}

// ---------------------------------------------------------------------------
// Hom

Hom::Hom(FiniteMV source, FiniteMV target, std::vector<std::size_t> componentMap)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(componentMap)) {
  if (map_.size() != target_.components()) {
    throw AlgebraError("component map has " + std::to_string(map_.size()) +
                       " entries for a target with " + std::to_string(target_.components()) +
                       " components");
  }
  for (std::size_t j = 0; j < map_.size(); ++j) {
    if (map_[j] >= source_.components()) {
      throw AlgebraError("component map entry " + std::to_string(map_[j]) + " out of range");
    }
    if (target_.order(j) % source_.order(map_[j]) != 0) {
      throw AlgebraError("source order " + std::to_string(source_.order(map_[j])) +
                         " does not divide target order " + std::to_string(target_.order(j)));
    }
  }
}

Hom Hom::identity(const FiniteMV& algebra) {
  std::vector<std::size_t> map(algebra.components());
  std::iota(map.begin(), map.end(), std::size_t{0});
  return Hom{algebra, algebra, std::move(map)};
}

Element Hom::operator()(const Element& a) const {
  source_.require(a);
  Element out;
  out.coords.reserve(map_.size());
  for (auto i : map_) out.coords.push_back(a[i]);
  return out;
}

bool Hom::isIsomorphism() const {
  if (source_.components() != target_.components()) return false;
  std::vector<bool> hit(source_.components(), false);
  for (std::size_t j = 0; j < map_.size(); ++j) {
    if (hit[map_[j]] || source_.order(map_[j]) != target_.order(j)) return false;
    hit[map_[j]] = true;
  }
  return true;
}

std::string Hom::str() const {
  return source_.str() + " -> " + target_.str() + " via " + joinIndices(map_);
}

Hom compose(const Hom& outer, const Hom& inner) {
  if (!(inner.target() == outer.source())) {
    throw AlgebraError("cannot compose " + outer.str() + " after " + inner.str());
  }
  std::vector<std::size_t> map;
  map.reserve(outer.componentMap().size());
  for (auto j : outer.componentMap()) map.push_back(inner.componentMap()[j]);
  return Hom{inner.source(), outer.target(), std::move(map)};
}

Hom pairing(const FiniteMV& source, std::span<const Hom> legs) {
  std::vector<std::int64_t> orders;
  std::vector<std::size_t> map;
  for (const auto& leg : legs) {
    if (!(leg.source() == source)) throw AlgebraError("pairing legs must share a source");
    orders.insert(orders.end(), leg.target().orders().begin(), leg.target().orders().end());
    map.insert(map.end(), leg.componentMap().begin(), leg.componentMap().end());
  }
  return Hom{source, FiniteMV{std::move(orders)}, std::move(map)};
}

std::vector<Hom> enumerateHoms(const FiniteMV& source, const FiniteMV& target) {
  // A hom into a product is a tuple of homs into the factors, and a hom into
  // a chain Ł_n factors through exactly one projection of the source followed
  // by the unique embedding Ł_m ↪ Ł_n, which exists iff m | n.
  std::vector<std::vector<std::size_t>> choices(target.components());
  for (std::size_t j = 0; j < target.components(); ++j) {
    for (std::size_t i = 0; i < source.components(); ++i) {
      if (target.order(j) % source.order(i) == 0) choices[j].push_back(i);
    }
    if (choices[j].empty()) return {};
  }
  std::vector<Hom> out;
  std::vector<std::size_t> pick(target.components(), 0);
  while (true) {
    std::vector<std::size_t> map(target.components());
    for (std::size_t j = 0; j < map.size(); ++j) map[j] = choices[j][pick[j]];
    out.emplace_back(source, target, std::move(map));
    std::size_t j = pick.size();
    while (j > 0) {
      --j;
      if (pick[j] + 1 < choices[j].size()) {
        ++pick[j];
        break;
      }
      pick[j] = 0;
      if (j == 0) return out;
    }
    if (pick.empty()) return out;
  }
}

ProductResult productAlg(const FiniteMV& a, const FiniteMV& b) {
  std::vector<std::int64_t> orders(a.orders().begin(), a.orders().end());
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  FiniteMV prod{std::move(orders)};
  std::vector<std::size_t> left(a.components());
  std::iota(left.begin(), left.end(), std::size_t{0});
  std::vector<std::size_t> right(b.components());
  std::iota(right.begin(), right.end(), a.components());
  return ProductResult{prod, Hom{prod, a, std::move(left)}, Hom{prod, b, std::move(right)}};
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(FiniteMV ambient, std::vector<std::size_t> vanishing)
    : ambient_(std::move(ambient)), vanishing_(std::move(vanishing)) {
  std::sort(vanishing_.begin(), vanishing_.end());
  vanishing_.erase(std::unique(vanishing_.begin(), vanishing_.end()), vanishing_.end());
  if (!vanishing_.empty() && vanishing_.back() >= ambient_.components()) {
    throw AlgebraError("ideal vanishing set names component " +
                       std::to_string(vanishing_.back()) + " of " + ambient_.str());
  }
}

Ideal Ideal::zero(const FiniteMV& ambient) {
  std::vector<std::size_t> all(ambient.components());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Ideal{ambient, std::move(all)};
}

Ideal Ideal::whole(const FiniteMV& ambient) { return Ideal{ambient, {}}; }

Ideal Ideal::principal(const FiniteMV& ambient, const Element& a) {
  return generatedBy(ambient, std::span<const Element>(&a, 1));
}

Ideal Ideal::generatedBy(const FiniteMV& ambient, std::span<const Element> generators) {
  std::vector<std::size_t> vanishing;
  for (std::size_t i = 0; i < ambient.components(); ++i) {
    bool allZero = true;
    for (const auto& g : generators) {
      ambient.require(g);
      if (!g[i].isZero()) {
        allZero = false;
        break;
      }
    }
    if (allZero) vanishing.push_back(i);
  }
  return Ideal{ambient, std::move(vanishing)};
}

Ideal Ideal::kernel(const Hom& h) {
  return Ideal{h.source(), {h.componentMap().begin(), h.componentMap().end()}};
}

bool Ideal::contains(const Element& a) const {
  ambient_.require(a);
  return std::all_of(vanishing_.begin(), vanishing_.end(),
                     [&](std::size_t i) { return a[i].isZero(); });
}

bool Ideal::isProper() const { return !vanishing_.empty(); }

Ideal Ideal::intersect(const Ideal& other) const {
  if (!(ambient_ == other.ambient_)) throw AlgebraError("ideals of different algebras");
  std::vector<std::size_t> v = vanishing_;
  v.insert(v.end(), other.vanishing_.begin(), other.vanishing_.end());
  return Ideal{ambient_, std::move(v)};
}

// ---------------------------------------------------------------------------
// Quotients and splittings

QuotientResult quotientByIdeal(const FiniteMV& algebra, const Ideal& ideal) {
  if (!(ideal.ambient() == algebra)) {
    throw AlgebraError("ideal of " + ideal.ambient().str() + " is not an ideal of " +
                       algebra.str());
  }
  std::vector<std::int64_t> orders;
  std::vector<std::size_t> map;
  for (auto i : ideal.vanishing()) {
    orders.push_back(algebra.order(i));
    map.push_back(i);
  }
  FiniteMV q{std::move(orders)};
  return QuotientResult{q, Hom{algebra, q, std::move(map)}};
}

QuotientResult localize(const FiniteMV& algebra, const Element& x) {
  if (!isBoolean(algebra, x)) {
    throw AlgebraError("cannot localize at non-Boolean element " + x.str());
  }
  return quotientByIdeal(algebra, Ideal::principal(algebra, neg(x)));
}

ProductSplit::ProductSplit(FiniteMV algebra, Element x)
    : algebra_(std::move(algebra)),
      x_(requireBoolean(algebra_, std::move(x))),
      q0_(localize(algebra_, neg(x_))),
      q1_(localize(algebra_, x_)) {}

Element ProductSplit::combine(const Element& c0, const Element& c1) const {
  algebra_.require(c0);
  algebra_.require(c1);
  return join(meet(c0, neg(x_)), meet(c1, x_));
}

ProductSplit productSplit(const FiniteMV& algebra, const Element& x) {
  return ProductSplit{algebra, x};
}

}  // namespace mvsep
