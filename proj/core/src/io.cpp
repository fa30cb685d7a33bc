#include "mvsep/io.hpp"

#include <string>

namespace mvsep::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ParseError(what); }

std::int64_t positiveInteger(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
    malformed(std::string(what) + " must be a positive integer");
  }
  return j.get<std::int64_t>();
}

RationalAlgebra rationalFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    malformed("rational algebra needs a \"kind\"");
  }
  const std::string kind = j["kind"];
  if (kind == "chain") {
    if (!j.contains("n")) malformed("chain needs \"n\"");
    return RationalAlgebra::chain(positiveInteger(j["n"], "chain order"));
  }
  if (kind == "supernatural") {
    std::map<std::int64_t, Exponent> primes;
    if (j.contains("primes")) {
      if (!j["primes"].is_object()) malformed("\"primes\" must be an object");
      for (const auto& [key, value] : j["primes"].items()) {
        std::int64_t p = 0;
        try {
          std::size_t used = 0;
          p = std::stoll(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          malformed("prime key '" + key + "' is not an integer");
        }
        if (value.is_string() && (value == "inf" || value == "∞")) {
          primes[p] = kInfiniteExponent;
        } else if (value.is_number_integer() && value.get<std::int64_t>() >= 0 &&
                   value.get<std::int64_t>() < kInfiniteExponent) {
          primes[p] = static_cast<Exponent>(value.get<std::int64_t>());
        } else {
          malformed("exponent of " + key + " must be a natural number or \"inf\"");
        }
      }
    }
    bool all = false;
    if (j.contains("all")) {
      if (!j["all"].is_boolean()) malformed("\"all\" must be a boolean");
      all = j["all"];
    }
    return RationalAlgebra::supernatural(std::move(primes), all);
  }
  malformed("unknown rational kind '" + kind + "'");
}

FiniteMV finiteFromJson(const Json& j) {
  if (!j.is_array()) malformed("\"finite\" must be an array of chain orders");
  std::vector<std::int64_t> orders;
  for (const auto& m : j) orders.push_back(positiveInteger(m, "chain order"));
  return FiniteMV{std::move(orders)};
}

}  // namespace

Json parseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

AlgebraInput algebraFromJson(const Json& j) {
  if (!j.is_object() || j.size() != 1) {
    malformed("algebra must be an object with exactly one of finite/rational/product/simplicial");
  }
  if (j.contains("finite")) return finiteFromJson(j["finite"]);
  if (j.contains("rational")) return rationalFromJson(j["rational"]);
  if (j.contains("simplicial")) {
    const Json& s = j["simplicial"];
    if (!s.is_object() || !s.contains("unit") || !s["unit"].is_array()) {
      malformed("simplicial group needs a \"unit\" array");
    }
    std::vector<std::int64_t> unit;
    for (const auto& u : s["unit"]) unit.push_back(positiveInteger(u, "unit coordinate"));
    if (s.contains("rank") &&
        (!s["rank"].is_number_integer() || s["rank"].get<std::size_t>() != unit.size())) {
      malformed("simplicial rank does not match the unit length");
    }
    return SimplicialGroup{std::move(unit)};
  }
  if (j.contains("product")) {
    if (!j["product"].is_array()) malformed("\"product\" must be an array");
    RationalProduct prod;
    bool allFinite = true;
    std::vector<std::int64_t> orders;
    for (const auto& item : j["product"]) {
      AlgebraInput factor = algebraFromJson(item);
      if (auto* f = std::get_if<FiniteMV>(&factor)) {
        orders.insert(orders.end(), f->orders().begin(), f->orders().end());
        for (auto m : f->orders()) prod.factors.push_back(RationalAlgebra::chain(m));
      } else if (auto* r = std::get_if<RationalAlgebra>(&factor)) {
        allFinite = false;
        prod.factors.push_back(*r);
      } else if (auto* p = std::get_if<RationalProduct>(&factor)) {
        allFinite = false;
        prod.factors.insert(prod.factors.end(), p->factors.begin(), p->factors.end());
      } else {
        malformed("simplicial groups cannot appear inside a product of algebras");
      }
    }
    if (allFinite) return FiniteMV{std::move(orders)};
    return prod;
  }
  malformed("algebra must be one of finite/rational/product/simplicial");
}

Json toJson(const FiniteMV& a) {
  return Json{{"finite", std::vector<std::int64_t>(a.orders().begin(), a.orders().end())}};
}

Json toJson(const RationalAlgebra& a) {
  if (a.isChain()) return Json{{"rational", {{"kind", "chain"}, {"n", a.chainOrder()}}}};
  Json primes = Json::object();
  if (!a.allPrimesInfinite()) {
    for (const auto& [p, e] : a.primes()) {
      primes[std::to_string(p)] = e == kInfiniteExponent ? Json("inf") : Json(e);
    }
  }
  return Json{
      {"rational", {{"kind", "supernatural"}, {"primes", primes}, {"all", a.allPrimesInfinite()}}}};
}

Json toJson(const RationalProduct& a) {
  Json items = Json::array();
  for (const auto& f : a.factors) items.push_back(toJson(f));
  return Json{{"product", items}};
}

Json toJson(const SimplicialGroup& g) {
  return Json{{"simplicial", {{"rank", g.rank()}, {"unit", g.unit()}}}};
}

Json toJson(const AlgebraInput& a) {
  return std::visit([](const auto& x) { return toJson(x); }, a);
}

RationalProduct asRationalProduct(const AlgebraInput& a) {
  if (auto* f = std::get_if<FiniteMV>(&a)) return RationalProduct::fromFinite(*f);
  if (auto* r = std::get_if<RationalAlgebra>(&a)) return RationalProduct{{*r}};
  if (auto* p = std::get_if<RationalProduct>(&a)) return *p;
  throw AlgebraError("a simplicial group is not an MV-algebra; apply gamma first");
}

Fraction fractionFromJson(const Json& j) {
  if (j.is_string()) return Fraction::parse(j.get<std::string>());
  if (j.is_number_integer() && (j == 0 || j == 1)) return Fraction{j.get<std::int64_t>(), 1};
  malformed("fraction must be a \"p/q\" string");
}

Json toJson(const Fraction& f) { return f.str(); }

Element elementFromJson(const Json& j) {
  if (j.is_string()) return Element{{fractionFromJson(j)}};
  if (!j.is_array()) malformed("element must be an array of \"p/q\" strings");
  Element e;
  for (const auto& c : j) e.coords.push_back(fractionFromJson(c));
  return e;
}

Json toJson(const Element& e) {
  Json out = Json::array();
  for (const auto& c : e.coords) out.push_back(c.str());
  return out;
}

Environment environmentFromJson(const Json& j, std::size_t components) {
  if (!j.is_object()) malformed("environment must be an object");
  Environment env;
  for (const auto& [name, value] : j.items()) {
    if (!isIdentifier(name)) malformed("'" + name + "' is not a variable name");
    if (value.is_string()) {
      env.emplace(name, Element{std::vector<Fraction>(components, fractionFromJson(value))});
    } else {
      env.emplace(name, elementFromJson(value));
    }
  }
  return env;
}

FinSpace spaceFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("opens")) {
    malformed("space needs \"points\" and \"opens\"");
  }
  if (!j["points"].is_number_integer() || j["points"].get<std::int64_t>() < 0 ||
      j["points"].get<std::int64_t>() > static_cast<std::int64_t>(kMaxSpacePoints)) {
    malformed("\"points\" must be an integer in [0,64]");
  }
  const auto n = j["points"].get<std::size_t>();
  if (!j["opens"].is_array()) malformed("\"opens\" must be an array of point lists");
  std::vector<PointSet> opens;
  for (const auto& o : j["opens"]) {
    if (!o.is_array()) malformed("each open must be an array of points");
    PointSet s = 0;
    for (const auto& p : o) {
      if (!p.is_number_integer() || p.get<std::int64_t>() < 0 ||
          p.get<std::size_t>() >= n) {
        malformed("open set mentions a point outside the space");
      }
      s |= PointSet{1} << p.get<std::size_t>();
    }
    opens.push_back(s);
  }
  return FinSpace{n, std::move(opens)};
}

Json toJson(const FinSpace& x) {
  Json opens = Json::array();
  for (PointSet o : x.opens()) {
    Json pts = Json::array();
    for (std::size_t p = 0; p < x.size(); ++p) {
      if ((o >> p) & 1U) pts.push_back(p);
    }
    opens.push_back(pts);
  }
  return Json{{"points", x.size()}, {"opens", opens}};
}

Json toJson(const Hom& h) {
  return Json{{"source", toJson(h.source())},
              {"target", toJson(h.target())},
              {"componentMap",
               std::vector<std::size_t>(h.componentMap().begin(), h.componentMap().end())}};
}

}  // namespace mvsep::io
