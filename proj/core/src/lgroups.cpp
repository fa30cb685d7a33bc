#include "mvsep/lgroups.hpp"

namespace mvsep {

SimplicialGroup::SimplicialGroup(std::vector<std::int64_t> unit) : unit_(std::move(unit)) {
  for (auto u : unit_) {
    if (u <= 0) {
      throw AlgebraError("unit coordinates must be strictly positive, got " + std::to_string(u));
    }
  }
}

std::string SimplicialGroup::str() const {
  std::string s = "(Z^" + std::to_string(rank()) + ", (";
  for (std::size_t i = 0; i < unit_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(unit_[i]);
  }
  return s + "))";
}

FiniteMV gamma(const SimplicialGroup& g) { return FiniteMV{g.unit()}; }

SimplicialGroup xi(const FiniteMV& a) {
  return SimplicialGroup{{a.orders().begin(), a.orders().end()}};
}

SimplicialGroup productUnital(const SimplicialGroup& g, const SimplicialGroup& h) {
  std::vector<std::int64_t> unit = g.unit();
  unit.insert(unit.end(), h.unit().begin(), h.unit().end());
  return SimplicialGroup{std::move(unit)};
}

Element gammaElement(const SimplicialGroup& g, const std::vector<std::int64_t>& x) {
  if (x.size() != g.rank()) throw AlgebraError("vector rank does not match group rank");
  Element e;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] > g.unit()[i]) {
      throw AlgebraError("vector is outside the unit interval of " + g.str());
    }
    e.coords.emplace_back(x[i], g.unit()[i]);
  }
  return e;
}

}  // namespace mvsep
