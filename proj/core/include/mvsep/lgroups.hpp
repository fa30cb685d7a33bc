#ifndef MVSEP_LGROUPS_HPP_
#define MVSEP_LGROUPS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mvsep/algebra.hpp"

namespace mvsep {

/// (ℤ^r, 1): the free Abelian group of rank r under the coordinatewise order,
/// with a strong unit whose coordinates are all strictly positive.
class SimplicialGroup {
 public:
  SimplicialGroup() = default;
  explicit SimplicialGroup(std::vector<std::int64_t> unit);

  std::size_t rank() const { return unit_.size(); }
  const std::vector<std::int64_t>& unit() const { return unit_; }

  std::string str() const;

  friend bool operator==(const SimplicialGroup&, const SimplicialGroup&) = default;

 private:
  std::vector<std::int64_t> unit_;
};

/// Γ: the unit interval [0,1] of (ℤ^r, u), read in Hölder coordinates
/// x_i / u_i, is ∏ Ł_{u_i}.
FiniteMV gamma(const SimplicialGroup& g);

/// Ξ: the inverse of Γ on finite MV-algebras.
SimplicialGroup xi(const FiniteMV& a);

/// Cartesian product: ranks add, units concatenate.
SimplicialGroup productUnital(const SimplicialGroup& g, const SimplicialGroup& h);

/// Unit-interval elements of (ℤ^r, u) as integer vectors 0 ≤ x ≤ u, mapped
/// to Γ(G) by x ↦ (x_i / u_i).
Element gammaElement(const SimplicialGroup& g, const std::vector<std::int64_t>& x);

}  // namespace mvsep

#endif  // MVSEP_LGROUPS_HPP_
