#include "mvsep/verify/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace mvsep::verify {

CarrierTables::CarrierTables(const FiniteMV& algebra) : elements(algebra.elements()) {
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  zero = index.at(algebra.zero());
  neg.resize(elements.size());
  oplus.assign(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Element n;
    for (const auto& c : elements[i].coords) n.coords.push_back(complement(c));
    neg[i] = index.at(n);
    for (std::size_t j = 0; j < elements.size(); ++j) {
      Element s;
      for (std::size_t k = 0; k < elements[i].size(); ++k) {
        s.coords.push_back(truncatedSum(elements[i][k], elements[j][k]));
      }
      oplus[i][j] = index.at(s);
    }
  }
}

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

// Sets f(a) = b and propagates every value forced by preservation of ¬ and ⊕.
bool assignAndPropagate(FunctionTable& f, std::size_t a, std::size_t b, const CarrierTables& src,
                        const CarrierTables& dst) {
  std::deque<std::size_t> queue;
  auto set = [&](std::size_t x, std::size_t v) {
    if (f[x] == kUnset) {
      f[x] = v;
      queue.push_back(x);
      return true;
    }
    return f[x] == v;
  };
  if (!set(a, b)) return false;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    if (!set(src.neg[x], dst.neg[f[x]])) return false;
    for (std::size_t z = 0; z < f.size(); ++z) {
      if (f[z] == kUnset) continue;
      if (!set(src.oplus[x][z], dst.oplus[f[x]][f[z]])) return false;
    }
  }
  return true;
}

void searchHoms(FunctionTable& f, const CarrierTables& src, const CarrierTables& dst,
                std::vector<FunctionTable>& out) {
  auto it = std::find(f.begin(), f.end(), kUnset);
  if (it == f.end()) {
    out.push_back(f);
    return;
  }
  const auto a = static_cast<std::size_t>(it - f.begin());
  for (std::size_t b = 0; b < dst.elements.size(); ++b) {
    FunctionTable g = f;
    if (assignAndPropagate(g, a, b, src, dst)) searchHoms(g, src, dst, out);
  }
}

// Enumerates every subset containing `seed` that is a fixed point of
// `close`, by deciding elements in index order.
void enumerateClosed(std::size_t n, const std::vector<std::size_t>& seed,
                     const std::function<std::vector<char>(std::vector<char>)>& close,
                     std::vector<std::vector<std::size_t>>& out) {
  std::vector<char> start(n, 0);
  for (auto s : seed) start[s] = 1;
  start = close(std::move(start));
  std::vector<char> excluded(n, 0);
  std::function<void(const std::vector<char>&, std::vector<char>&, std::size_t)> rec =
      [&](const std::vector<char>& in, std::vector<char>& out_, std::size_t from) {
        std::size_t next = from;
        while (next < n && (in[next] || out_[next])) ++next;
        if (next == n) {
          std::vector<std::size_t> members;
          for (std::size_t i = 0; i < n; ++i) {
            if (in[i]) members.push_back(i);
          }
          out.push_back(std::move(members));
          return;
        }
        std::vector<char> with = in;
        with[next] = 1;
        with = close(std::move(with));
        bool clash = false;
        for (std::size_t i = 0; i < n; ++i) {
          if (with[i] && out_[i]) clash = true;
        }
        if (!clash) rec(with, out_, next + 1);
        out_[next] = 1;
        rec(in, out_, next + 1);
        out_[next] = 0;
      };
  rec(start, excluded, 0);
  std::sort(out.begin(), out.end());
}

}  // namespace

std::vector<FunctionTable> bruteForceHoms(const CarrierTables& a, const CarrierTables& b) {
  std::vector<FunctionTable> out;
  FunctionTable f(a.elements.size(), kUnset);
  if (assignAndPropagate(f, a.zero, b.zero, a, b)) searchHoms(f, a, b, out);
  std::sort(out.begin(), out.end());
  return out;
}

FunctionTable tableOf(const Hom& h, const CarrierTables& a, const CarrierTables& b) {
  FunctionTable t;
  t.reserve(a.elements.size());
  for (const auto& e : a.elements) t.push_back(b.index.at(h(e)));
  return t;
}

std::vector<std::vector<std::size_t>> bruteForceIdeals(const CarrierTables& a) {
  const std::size_t n = a.elements.size();
  std::vector<std::vector<std::size_t>> below(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (lessEq(a.elements[y], a.elements[x])) below[x].push_back(y);
    }
  }
  auto close = [&](std::vector<char> s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < n; ++x) {
        if (!s[x]) continue;
        for (auto y : below[x]) {
          if (!s[y]) s[y] = 1, changed = true;
        }
        for (std::size_t z = 0; z < n; ++z) {
          if (s[z] && !s[a.oplus[x][z]]) s[a.oplus[x][z]] = 1, changed = true;
        }
      }
    }
    return s;
  };
  std::vector<std::vector<std::size_t>> out;
  enumerateClosed(n, {a.zero}, close, out);
  return out;
}

std::vector<std::vector<std::size_t>> bruteForceSubalgebras(const CarrierTables& a) {
  const std::size_t n = a.elements.size();
  auto close = [&](std::vector<char> s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < n; ++x) {
        if (!s[x]) continue;
        if (!s[a.neg[x]]) s[a.neg[x]] = 1, changed = true;
        for (std::size_t z = 0; z < n; ++z) {
          if (s[z] && !s[a.oplus[x][z]]) s[a.oplus[x][z]] = 1, changed = true;
        }
      }
    }
    return s;
  };
  std::vector<std::vector<std::size_t>> out;
  enumerateClosed(n, {a.zero}, close, out);
  return out;
}

std::vector<Fraction> rationalClosure(std::span<const Fraction> generators) {
  std::set<Fraction> seen{Fraction::zero()};
  seen.insert(generators.begin(), generators.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Fraction> current(seen.begin(), seen.end());
    for (const auto& x : current) {
      changed |= seen.insert(complement(x)).second;
      for (const auto& y : current) changed |= seen.insert(truncatedSum(x, y)).second;
    }
  }
  return {seen.begin(), seen.end()};
}

Partition bruteForceComponents(const FinSpace& x) {
  const std::size_t n = x.size();
  if (n > 16) throw std::length_error("brute-force components limited to 16 points");
  const std::size_t subsets = std::size_t{1} << n;
  // hull[T]: intersection of every open containing T.
  std::vector<PointSet> hull(subsets, fullSet(n));
  for (std::size_t t = 0; t < subsets; ++t) {
    for (PointSet o : x.opens()) {
      if ((t & ~o) == 0) hull[t] &= o;
    }
  }
  auto relativelyOpen = [&](PointSet t, PointSet s) { return (hull[t] & s) == t; };
  std::vector<PointSet> reach(n, 0);
  for (PointSet s = 1; s < subsets; ++s) {
    bool connected = true;
    // Proper nonempty subsets t of s.
    for (PointSet t = (s - 1) & s; t != 0 && connected; t = (t - 1) & s) {
      if (relativelyOpen(t, s) && relativelyOpen(s & ~t, s)) connected = false;
    }
    if (!connected) continue;
    for (std::size_t p = 0; p < n; ++p) {
      if ((s >> p) & 1U) reach[p] |= s;
    }
  }
  std::vector<std::size_t> labels(n);
  for (std::size_t p = 0; p < n; ++p) {
    labels[p] = static_cast<std::size_t>(__builtin_ctzll(reach[p]));
  }
  return Partition::fromLabels(labels);
}

namespace {

// Preorders on n points, each as leq[x] = {y : x ≤ y}. A preorder on n+1
// points is a preorder on the first n plus a down-set D and up-set U for the
// new point with d ≤ u for all d ∈ D, u ∈ U.
std::vector<std::vector<PointSet>> allPreorders(std::size_t n) {
  std::vector<std::vector<PointSet>> level{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<PointSet>> next;
    const PointSet newBit = PointSet{1} << k;
    for (const auto& leq : level) {
      auto isUp = [&](PointSet s) {
        for (std::size_t x = 0; x < k; ++x) {
          if (((s >> x) & 1U) && (leq[x] & ~s)) return false;
        }
        return true;
      };
      auto isDown = [&](PointSet s) {
        for (std::size_t x = 0; x < k; ++x) {
          if (!((s >> x) & 1U) && (leq[x] & s)) return false;
        }
        return true;
      };
      for (PointSet down = 0; down < (PointSet{1} << k); ++down) {
        if (!isDown(down)) continue;
        for (PointSet up = 0; up < (PointSet{1} << k); ++up) {
          if (!isUp(up)) continue;
          bool ok = true;
          for (std::size_t d = 0; d < k && ok; ++d) {
            if (((down >> d) & 1U) && (up & ~leq[d])) ok = false;
          }
          if (!ok) continue;
          std::vector<PointSet> ext = leq;
          for (std::size_t d = 0; d < k; ++d) {
            if ((down >> d) & 1U) ext[d] |= newBit;
          }
          ext.push_back(up | newBit);
          next.push_back(std::move(ext));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<PointSet> permuted(std::span<const PointSet> opens, std::span<const std::size_t> perm) {
  std::vector<PointSet> out;
  out.reserve(opens.size());
  for (PointSet o : opens) {
    PointSet p = 0;
    for (std::size_t x = 0; x < perm.size(); ++x) {
      if ((o >> x) & 1U) p |= PointSet{1} << perm[x];
    }
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<FinSpace> allTopologies(std::size_t n) {
  std::vector<FinSpace> out;
  for (const auto& leq : allPreorders(n)) out.push_back(FinSpace::fromSpecialization(leq));
  return out;
}

std::vector<FinSpace> topologiesUpToHomeomorphism(std::size_t n) {
  std::set<std::vector<PointSet>> seen;
  std::vector<FinSpace> out;
  std::vector<std::size_t> perm(n);
  for (const auto& space : allTopologies(n)) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<PointSet> key = permuted(space.opens(), perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
      key = std::min(key, permuted(space.opens(), perm));
    }
    if (seen.insert(key).second) out.push_back(space);
  }
  return out;
}

std::vector<std::vector<std::size_t>> allMaps(std::size_t from, std::size_t to) {
  std::vector<std::vector<std::size_t>> out;
  if (to == 0) {
    if (from == 0) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> f(from, 0);
  while (true) {
    out.push_back(f);
    std::size_t i = 0;
    while (i < from && ++f[i] == to) f[i++] = 0;
    if (i == from) return out;
  }
}

std::vector<FiniteMV> finiteAlgebras(std::size_t maxComponents, std::int64_t maxOrder) {
  std::vector<FiniteMV> out;
  std::vector<std::int64_t> current;
  std::function<void(std::int64_t)> rec = [&](std::int64_t minOrder) {
    out.emplace_back(current);
    if (current.size() == maxComponents) return;
    for (std::int64_t m = minOrder; m <= maxOrder; ++m) {
      current.push_back(m);
      rec(m);
      current.pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<FiniteMV> algebrasUpToCardinality(std::uint64_t maxCardinality) {
  std::vector<FiniteMV> out;
  std::vector<std::int64_t> current;
  std::function<void(std::int64_t, std::uint64_t)> rec = [&](std::int64_t minOrder,
                                                             std::uint64_t size) {
    out.emplace_back(current);
    for (std::int64_t m = minOrder; size * static_cast<std::uint64_t>(m + 1) <= maxCardinality;
         ++m) {
      current.push_back(m);
      rec(m, size * static_cast<std::uint64_t>(m + 1));
      current.pop_back();
    }
  };
  rec(1, 1);
  return out;
}

}  // namespace mvsep::verify
