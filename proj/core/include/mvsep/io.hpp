#ifndef MVSEP_IO_HPP_
#define MVSEP_IO_HPP_

#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "mvsep/algebra.hpp"
#include "mvsep/lgroups.hpp"
#include "mvsep/rational.hpp"
#include "mvsep/terms.hpp"
#include "mvsep/topology.hpp"

namespace mvsep::io {

using Json = nlohmann::json;

/// Any algebra the JSON format can name:
///   {"finite":[2,3]}
///   {"rational":{"kind":"chain","n":6}}
///   {"rational":{"kind":"supernatural","primes":{"2":"inf"},"all":false}}
///   {"product":[ <finite or rational>, … ]}   (all-finite products stay finite)
///   {"simplicial":{"rank":2,"unit":[2,3]}}
using AlgebraInput = std::variant<FiniteMV, RationalAlgebra, RationalProduct, SimplicialGroup>;

/// Parses JSON text; malformed JSON is reported as ParseError.
Json parseJson(std::string_view text);

AlgebraInput algebraFromJson(const Json& j);
Json toJson(const FiniteMV& a);
Json toJson(const RationalAlgebra& a);
Json toJson(const RationalProduct& a);
Json toJson(const SimplicialGroup& g);
Json toJson(const AlgebraInput& a);

/// Everything except a simplicial group, viewed as a product of rationals.
RationalProduct asRationalProduct(const AlgebraInput& a);

Fraction fractionFromJson(const Json& j);
Json toJson(const Fraction& f);

/// ["1/2","1/3"]; a bare string is accepted for one-component algebras.
Element elementFromJson(const Json& j);
Json toJson(const Element& e);

/// {"x":"1/2"} or {"x":["1/2","1/3"]}. A bare string is broadcast to every
/// coordinate of an algebra with `components` components.
Environment environmentFromJson(const Json& j, std::size_t components);

/// {"points":2,"opens":[[],[0],[0,1]]}
FinSpace spaceFromJson(const Json& j);
Json toJson(const FinSpace& x);

Json toJson(const Hom& h);

}  // namespace mvsep::io

#endif  // MVSEP_IO_HPP_
