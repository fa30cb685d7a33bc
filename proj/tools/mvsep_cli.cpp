// mvsep: command-line front end for the library.
//
//   mvsep separable --alg '{"finite":[2,3]}'
//   mvsep pi0 --space '{"points":2,"opens":[[],[0],[0,1]]}' --format text
//   mvsep verify --all --seed 7
//
// Any --alg/--space/--elem/--env value may be given as @path to read a file.
// Exit status: 0 ok, 1 verify found a violation, 2 malformed input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mvsep/io.hpp"
#include "mvsep/mvsep.hpp"
#include "mvsep/verify/acceptance.hpp"

namespace {

using mvsep::io::Json;
namespace io = mvsep::io;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitMalformed = 2;

struct Options {
  std::vector<std::string> algs;
  std::vector<std::string> spaces;
  std::optional<std::string> elem;
  std::optional<std::string> env;
  std::optional<std::string> term;
  std::string format = "json";
  std::uint64_t seed = mvsep::verify::VerifyOptions{}.seed;
  std::optional<std::uint64_t> maxSize;
  bool all = false;
  std::vector<int> criteria;
};

struct Report {
  Json json;
  std::string text;
  int status = kExitOk;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string inlineOrFile(const std::string& value) {
  if (value.empty() || value.front() != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in) throw UsageError("cannot read " + value.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json readJson(const std::string& value) { return io::parseJson(inlineOrFile(value)); }

std::vector<io::AlgebraInput> algebras(const Options& o, std::size_t min, std::size_t max) {
  if (o.algs.size() < min || o.algs.size() > max) {
    throw UsageError(min == max ? "expected " + std::to_string(min) + " --alg"
                                : "expected " + std::to_string(min) + ".." + std::to_string(max) +
                                      " --alg");
  }
  std::vector<io::AlgebraInput> out;
  for (const auto& a : o.algs) out.push_back(io::algebraFromJson(readJson(a)));
  return out;
}

const mvsep::FiniteMV& finite(const io::AlgebraInput& a, const char* verb) {
  if (const auto* f = std::get_if<mvsep::FiniteMV>(&a)) return *f;
  throw UsageError(std::string(verb) + " needs a finite algebra");
}

mvsep::Element element(const Options& o) {
  if (!o.elem) throw UsageError("missing --elem");
  return io::elementFromJson(readJson(*o.elem));
}

std::string joinStrings(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string boolText(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------

Report cmdEval(const Options& o) {
  const auto algs = algebras(o, 1, 1);
  const auto& a = finite(algs[0], "eval");
  if (!o.term) throw UsageError("missing --term");
  const mvsep::Term t = mvsep::parseTerm(*o.term);
  const mvsep::Environment env =
      o.env ? io::environmentFromJson(readJson(*o.env), a.components()) : mvsep::Environment{};
  const mvsep::Element v = mvsep::evalTerm(t, env, a);
  Report r;
  r.json = {{"term", mvsep::printTerm(t)}, {"algebra", io::toJson(a)}, {"value", io::toJson(v)}};
  r.text = mvsep::printTerm(t) + " = " + v.str();
  return r;
}

Report cmdDecompose(const Options& o) {
  const auto algs = algebras(o, 1, 1);
  const auto& a = finite(algs[0], "decompose");
  const mvsep::Decomposition d = mvsep::decompose(a);
  Report r;
  Json factors = Json::array();
  std::vector<std::string> names;
  for (const auto& f : d.factors) {
    factors.push_back(io::toJson(f));
    names.push_back(f.str());
  }
  r.json = {{"algebra", io::toJson(a)},
            {"factors", factors},
            {"indecomposable", d.factors.size() == 1},
            {"witness", io::toJson(d.witness)}};
  r.text = a.str() + " ≅ " + (names.empty() ? "1" : joinStrings(names, " × "));
  return r;
}

Report cmdPierce(const Options& o) {
  const auto algs = algebras(o, 1, 2);
  Report r;
  if (algs.size() == 2) {
    const auto& a = finite(algs[0], "pierce");
    const auto& b = finite(algs[1], "pierce");
    const auto rep = mvsep::pierceCoproductCheck(a, b);
    r.json = {{"atomsLeft", rep.atomsLeft},
              {"atomsRight", rep.atomsRight},
              {"atomsCoproduct", rep.atomsCoproduct},
              {"atomsBooleanCoproduct", rep.atomsBooleanCoproduct},
              {"canonicalMapIsIsomorphism", rep.canonicalMapIsIsomorphism},
              {"preservesCoproduct", rep.passed()}};
    r.text = "P(A+B) has " + std::to_string(rep.atomsCoproduct) + " atoms, P A + P B has " +
             std::to_string(rep.atomsBooleanCoproduct) + "; preserved: " + boolText(rep.passed());
    return r;
  }
  const auto& a = finite(algs[0], "pierce");
  const mvsep::BooleanSkeleton p = mvsep::booleanSkeleton(a);
  Json atoms = Json::array();
  for (const auto& x : p.atoms()) atoms.push_back(io::toJson(x));
  Json elements = Json::array();
  for (const auto& x : p.elements()) elements.push_back(io::toJson(x));
  r.json = {{"algebra", io::toJson(a)},
            {"atomCount", p.atomCount()},
            {"atoms", atoms},
            {"elements", elements}};
  r.text = "P " + a.str() + " ≅ 2^" + std::to_string(p.atomCount());
  return r;
}

Report cmdCoproduct(const Options& o) {
  auto algs = algebras(o, 1, 2);
  if (algs.size() == 1) algs.push_back(algs[0]);
  Report r;
  const auto* fa = std::get_if<mvsep::FiniteMV>(&algs[0]);
  const auto* fb = std::get_if<mvsep::FiniteMV>(&algs[1]);
  if (fa && fb) {
    const mvsep::CoproductResult c = mvsep::coproductFinite(*fa, *fb);
    r.json = {{"algebra", io::toJson(c.algebra)},
              {"in0", io::toJson(c.in0)},
              {"in1", io::toJson(c.in1)},
              {"cardinality", c.algebra.cardinality()}};
    if (c.codiagonal) r.json["codiagonal"] = io::toJson(*c.codiagonal);
    r.text = fa->str() + " + " + fb->str() + " = " + c.algebra.str();
    return r;
  }
  const auto a = io::asRationalProduct(algs[0]);
  const auto b = io::asRationalProduct(algs[1]);
  const mvsep::RationalCoproduct c = mvsep::coproductRationalProduct(a, b);
  r.json = {{"algebra", io::toJson(c.algebra)}};
  r.text = a.str() + " + " + b.str() + " = " + c.algebra.str();
  return r;
}

Json factorsJson(const std::vector<mvsep::RationalAlgebra>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) out.push_back(io::toJson(f));
  return out;
}

std::string factorsText(const std::vector<mvsep::RationalAlgebra>& factors) {
  std::vector<std::string> names;
  for (const auto& f : factors) names.push_back(f.str());
  return "[" + joinStrings(names, ", ") + "]";
}

Report cmdSeparable(const Options& o) {
  const auto alg = algebras(o, 1, 1)[0];
  Report r;
  if (const auto* a = std::get_if<mvsep::FiniteMV>(&alg)) {
    const mvsep::SeparabilityVerdict v = mvsep::isSeparable(*a);
    const mvsep::SeparabilityCertificate cert = mvsep::separabilityWitness(*a);
    r.json = {{"separable", v.separable}, {"factors", factorsJson(v.factors)}};
    Json witness = {{"coproduct", io::toJson(cert.coproduct)}};
    if (cert.witness) witness["e"] = io::toJson(*cert.witness);
    if (cert.isoAfterLocalization) witness["iso"] = io::toJson(*cert.isoAfterLocalization);
    if (!cert.reason.empty()) witness["reason"] = cert.reason;
    r.json["certificate"] = witness;
    r.text = "separable: " + boolText(v.separable) + ", factors " + factorsText(v.factors);
    return r;
  }
  const mvsep::SeparabilityVerdict v = mvsep::isSeparable(io::asRationalProduct(alg));
  r.json = {{"separable", v.separable}, {"factors", factorsJson(v.factors)}};
  r.text = "separable: " + boolText(v.separable) + ", factors " + factorsText(v.factors);
  return r;
}

Report cmdSubterminal(const Options& o) {
  const auto alg = algebras(o, 1, 1)[0];
  bool epic = false;
  if (const auto* a = std::get_if<mvsep::FiniteMV>(&alg)) {
    epic = mvsep::isSubterminalEpic(*a);
  } else if (const auto* q = std::get_if<mvsep::RationalAlgebra>(&alg)) {
    epic = mvsep::isSubterminalEpic(*q);
  } else {
    epic = mvsep::isSubterminalEpic(io::asRationalProduct(alg));
  }
  Report r;
  r.json = {{"subterminal", epic}};
  r.text = boolText(epic);
  return r;
}

Report cmdSpec(const Options& o) {
  const auto algs = algebras(o, 1, 1);
  const auto& a = finite(algs[0], "spec");
  Report r;
  Json points = Json::array();
  for (const auto& p : mvsep::spectrum(a)) {
    points.push_back({{"component", p.component},
                      {"quotient", io::toJson(mvsep::primeQuotient(a, p).algebra)}});
  }
  r.json = {{"algebra", io::toJson(a)},
            {"points", points},
            {"semisimple", mvsep::isSemisimple(a)},
            {"simple", mvsep::isSimple(a)}};
  r.text = "Spec " + a.str() + ": " + std::to_string(points.size()) + " points, discrete";
  if (o.elem) {
    const mvsep::Element x = element(o);
    a.require(x);
    const mvsep::Clopen su = mvsep::support(a, x);
    r.json["support"] = su;
    Json gelfand = Json::array();
    for (const auto& f : mvsep::gelfandTransform(a, x)) gelfand.push_back(io::toJson(f));
    r.json["gelfand"] = gelfand;
    r.json["boolean"] = mvsep::isBooleanViaPrimes(a, x);
    std::vector<std::string> ids;
    for (auto i : su) ids.push_back(std::to_string(i));
    r.text += "; Su" + x.str() + " = {" + joinStrings(ids, ",") + "}";
  }
  return r;
}

Report cmdRank(const Options& o) {
  const auto alg = algebras(o, 1, 1)[0];
  const mvsep::Element x = element(o);
  const mvsep::OrderRank rank = std::holds_alternative<mvsep::FiniteMV>(alg)
                                    ? mvsep::orderRank(std::get<mvsep::FiniteMV>(alg), x)
                                    : mvsep::orderRank(io::asRationalProduct(alg), x);
  Report r;
  Json generated = Json::array();
  for (const auto& e : rank.generated.elements) generated.push_back(io::toJson(e));
  r.json = {{"element", io::toJson(x)},
            {"rank", rank.rank},
            {"factorOrders", rank.factorOrders},
            {"generatedSize", rank.generated.size()},
            {"generated", generated}};
  std::vector<std::string> orders;
  for (auto m : rank.factorOrders) orders.push_back("Ł" + std::to_string(m));
  r.text = "rank " + x.str() + " = " + std::to_string(rank.rank) + ", Sa ≅ " +
           (orders.empty() ? "1" : joinStrings(orders, " × "));
  return r;
}

Json partitionJson(const mvsep::Partition& p) {
  Json classes = Json::array();
  for (auto mask : p.classes()) {
    Json members = Json::array();
    for (std::size_t i = 0; i < 64; ++i) {
      if ((mask >> i) & 1U) members.push_back(i);
    }
    classes.push_back(members);
  }
  return classes;
}

Report cmdPi0(const Options& o) {
  if (o.spaces.empty() || o.spaces.size() > 2) throw UsageError("expected 1..2 --space");
  std::vector<mvsep::FinSpace> xs;
  for (const auto& s : o.spaces) xs.push_back(io::spaceFromJson(readJson(s)));
  Report r;
  if (xs.size() == 2) {
    const mvsep::GammaComparison g = mvsep::gammaCompare(xs[0], xs[1]);
    r.json = {{"map", g.map}, {"wellDefined", g.wellDefined}, {"homeomorphism", g.homeomorphism}};
    r.text = "γ: π0(X×Y) → π0X × π0Y homeomorphism: " + boolText(g.homeomorphism);
    return r;
  }
  const mvsep::Pi0Result p = mvsep::pi0(xs[0]);
  const mvsep::EMapResult e = mvsep::eMap(xs[0]);
  r.json = {{"classes", partitionJson(p.classes)},
            {"classCount", p.classes.classCount},
            {"quotient", io::toJson(p.quotient)},
            {"quasiComponentsAgree", mvsep::quasiComponents(xs[0]) == p.classes},
            {"eMapComparisonIsHomeomorphism", e.comparisonIsHomeomorphism}};
  r.text = std::to_string(p.classes.classCount) + " class" +
           (p.classes.classCount == 1 ? "" : "es");
  return r;
}

Report cmdGamma(const Options& o) {
  const auto alg = algebras(o, 1, 1)[0];
  Report r;
  if (const auto* g = std::get_if<mvsep::SimplicialGroup>(&alg)) {
    const mvsep::FiniteMV a = mvsep::gamma(*g);
    r.json = {{"gamma", io::toJson(a)}};
    r.text = "Γ" + g->str() + " = " + a.str();
    return r;
  }
  const auto& a = finite(alg, "gamma");
  const mvsep::SimplicialGroup g = mvsep::xi(a);
  r.json = {{"xi", io::toJson(g)}};
  r.text = "Ξ" + a.str() + " = " + g.str();
  return r;
}

Report cmdVerify(const Options& o) {
  mvsep::verify::VerifyOptions opts;
  opts.seed = o.seed;
  opts.maxSize = o.maxSize;
  std::vector<int> ids = o.criteria;
  if (o.all || ids.empty()) ids = mvsep::verify::criterionIds();
  Report r;
  Json results = Json::array();
  std::ostringstream text;
  bool allPassed = true;
  for (int id : ids) {
    const auto res = mvsep::verify::runCriterion(id, opts);
    allPassed = allPassed && res.passed;
    // Timings are left out of the JSON so reports stay byte-identical.
    results.push_back({{"id", res.id},
                       {"title", res.title},
                       {"passed", res.passed},
                       {"cases", res.cases},
                       {"detail", res.detail}});
    text << (res.passed ? "PASS " : "FAIL ") << res.id << "  " << res.title << "  ("
         << res.detail << ")\n";
  }
  r.json = {{"seed", o.seed}, {"passed", allPassed}, {"criteria", results}};
  if (o.maxSize) r.json["maxSize"] = *o.maxSize;
  r.text = text.str();
  if (!r.text.empty()) r.text.pop_back();
  r.status = allPassed ? kExitOk : kExitViolation;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite and rational MV-algebras: separability, Pierce spectra, coproducts"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--alg", o.algs, "algebra as JSON (repeatable), or @file");
  app.add_option("--space", o.spaces, "finite space as JSON (repeatable), or @file");
  app.add_option("--elem", o.elem, "element as JSON, or @file");
  app.add_option("--env", o.env, "variable assignment as JSON, or @file");
  app.add_option("--term", o.term, "term, e.g. 'x + !y'");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", o.seed, "seed for sampled checks");
  app.add_option("--max-size", o.maxSize, "cap on carrier sizes in verify sweeps");
  app.add_flag("--all", o.all, "run every acceptance criterion");
  app.add_option("--criterion", o.criteria, "run only these criteria (repeatable)");

  using Handler = Report (*)(const Options&);
  const std::vector<std::tuple<const char*, const char*, Handler>> verbs{
      {"eval", "evaluate a term in a finite algebra", cmdEval},
      {"decompose", "split a finite algebra into indecomposable chains", cmdDecompose},
      {"pierce", "Boolean skeleton, or coproduct preservation for two algebras", cmdPierce},
      {"coproduct", "A+B (or A+A for a single --alg) with its injections", cmdCoproduct},
      {"separable", "decide separability with a certificate", cmdSeparable},
      {"subterminal", "decide whether A → 1 is epic", cmdSubterminal},
      {"spec", "prime spectrum; support and Gelfand transform with --elem", cmdSpec},
      {"rank", "order-rank of --elem", cmdRank},
      {"pi0", "components of a finite space, or γ for two spaces", cmdPi0},
      {"gamma", "Γ of a simplicial group, or Ξ of a finite algebra", cmdGamma},
      {"verify", "run the acceptance suites", cmdVerify},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& [name, help, handler] : verbs) subs.emplace_back(app.add_subcommand(name, help), handler);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  Handler handler = nullptr;
  for (const auto& [sub, h] : subs) {
    if (sub->parsed()) handler = h;
  }
  try {
    const Report r = handler(o);
    if (o.format == "text") {
      std::cout << r.text << "\n";
    } else {
      std::cout << r.json.dump(2) << "\n";
    }
    return r.status;
  } catch (const mvsep::ParseError& e) {
    std::cerr << "error: " << e.what();
    if (e.position() != mvsep::ParseError::npos) std::cerr << " (at offset " << e.position() << ")";
    std::cerr << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::logic_error& e) {
    // out_of_range, length_error: inputs beyond what the library accepts
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitMalformed;
}
