#include "mvsep/rational.hpp"

#include <algorithm>

namespace mvsep {

std::map<std::int64_t, Exponent> factorize(std::int64_t n) {
  if (n < 1) throw AlgebraError("cannot factorize " + std::to_string(n));
  std::map<std::int64_t, Exponent> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

namespace {

bool isPrime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t power(std::int64_t p, Exponent e) {
  std::int64_t out = 1;
  for (Exponent i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(out, p, &out)) {
      throw std::overflow_error("finite supernatural number overflows 64 bits");
    }
  }
  return out;
}

}  // namespace

RationalAlgebra RationalAlgebra::chain(std::int64_t n) {
  if (n < 1) throw AlgebraError("chain order must be at least 1, got " + std::to_string(n));
  RationalAlgebra r;
  r.chainOrder_ = n;
  return r;
}

RationalAlgebra RationalAlgebra::supernatural(std::map<std::int64_t, Exponent> primes,
                                              bool allPrimesInfinite) {
  for (const auto& [p, e] : primes) {
    if (!isPrime(p)) throw AlgebraError(std::to_string(p) + " is not a prime");
  }
  std::erase_if(primes, [](const auto& kv) { return kv.second == 0; });
  RationalAlgebra r;
  if (allPrimesInfinite) {
    r.all_ = true;
    return r;
  }
  bool anyInfinite = std::any_of(primes.begin(), primes.end(),
                                 [](const auto& kv) { return kv.second == kInfiniteExponent; });
  if (!anyInfinite) {
    std::int64_t n = 1;
    for (const auto& [p, e] : primes) {
      if (__builtin_mul_overflow(n, power(p, e), &n)) {
        throw std::overflow_error("finite supernatural number overflows 64 bits");
      }
    }
    return chain(n);
  }
  r.primes_ = std::move(primes);
  return r;
}

std::int64_t RationalAlgebra::chainOrder() const {
  if (!isChain()) throw AlgebraError(str() + " is not a finite chain");
  return chainOrder_;
}

std::map<std::int64_t, Exponent> RationalAlgebra::primes() const {
  return isChain() ? factorize(chainOrder_) : primes_;
}

Exponent RationalAlgebra::exponent(std::int64_t prime) const {
  if (all_) return kInfiniteExponent;
  auto ps = primes();
  auto it = ps.find(prime);
  return it == ps.end() ? 0 : it->second;
}

bool RationalAlgebra::contains(const Fraction& f) const {
  if (all_) return true;
  if (isChain()) return chainOrder_ % f.den() == 0;
  for (const auto& [p, e] : factorize(f.den())) {
    auto it = primes_.find(p);
    if (it == primes_.end()) return false;
    if (it->second != kInfiniteExponent && it->second < e) return false;
  }
  return true;
}

std::string RationalAlgebra::str() const {
  if (all_) return "Q∩[0,1]";
  if (isChain()) return "Ł" + std::to_string(chainOrder_);
  std::string s = "{";
  bool first = true;
  for (const auto& [p, e] : primes_) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(p) + "^" + (e == kInfiniteExponent ? "∞" : std::to_string(e));
  }
  return s + "}";
}

RationalAlgebra coproductRational(const RationalAlgebra& a, const RationalAlgebra& b) {
  if (a.isChain() && b.isChain()) {
    return RationalAlgebra::chain(lcm64(a.chainOrder(), b.chainOrder()));
  }
  if (a.allPrimesInfinite() || b.allPrimesInfinite()) return RationalAlgebra::full();
  auto joined = a.primes();
  for (const auto& [p, e] : b.primes()) joined[p] = std::max(joined[p], e);
  return RationalAlgebra::supernatural(std::move(joined));
}

RationalProduct RationalProduct::fromFinite(const FiniteMV& algebra) {
  RationalProduct out;
  for (auto m : algebra.orders()) out.factors.push_back(RationalAlgebra::chain(m));
  return out;
}

bool RationalProduct::contains(const Element& e) const {
  if (e.size() != factors.size()) return false;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!factors[i].contains(e[i])) return false;
  }
  return true;
}

void RationalProduct::require(const Element& e) const {
  if (!contains(e)) throw AlgebraError("element " + e.str() + " is not in " + str());
}

std::string RationalProduct::str() const {
  if (factors.empty()) return "terminal";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "×";
    s += factors[i].str();
  }
  return s;
}

}  // namespace mvsep
