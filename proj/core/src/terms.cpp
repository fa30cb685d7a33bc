#include "mvsep/terms.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace mvsep {

struct Term::Node {
  Kind kind;
  Fraction value;
  std::string name;
  std::vector<Term> children;
};

Term Term::zero() { return Term{std::make_shared<const Node>(Node{Kind::kZero, {}, {}, {}})}; }

Term Term::one() {
  return Term{std::make_shared<const Node>(Node{Kind::kOne, Fraction::one(), {}, {}})};
}

Term Term::constant(const Fraction& value) {
  return Term{std::make_shared<const Node>(Node{Kind::kConstant, value, {}, {}})};
}

Term Term::var(std::string name) {
  if (!isIdentifier(name)) throw ParseError("'" + name + "' is not a valid variable name");
  return Term{std::make_shared<const Node>(Node{Kind::kVar, {}, std::move(name), {}})};
}

Term Term::negation(Term operand) {
  return Term{std::make_shared<const Node>(Node{Kind::kNeg, {}, {}, {std::move(operand)}})};
}

Term Term::binary(Kind kind, Term lhs, Term rhs) {
  if (kind != Kind::kOplus && kind != Kind::kOdot && kind != Kind::kJoin && kind != Kind::kMeet) {
    throw AlgebraError("not a binary term kind");
  }
  return Term{
      std::make_shared<const Node>(Node{kind, {}, {}, {std::move(lhs), std::move(rhs)}})};
}

Term::Kind Term::kind() const { return node_->kind; }
const Fraction& Term::value() const { return node_->value; }
const std::string& Term::name() const { return node_->name; }

const Term& Term::operand() const {
  if (kind() != Kind::kNeg) throw AlgebraError("term has no single operand");
  return node_->children[0];
}

const Term& Term::lhs() const {
  if (!isBinary()) throw AlgebraError("term is not binary");
  return node_->children[0];
}

const Term& Term::rhs() const {
  if (!isBinary()) throw AlgebraError("term is not binary");
  return node_->children[1];
}

bool Term::isBinary() const { return node_->children.size() == 2; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->value == b.node_->value &&
         a.node_->name == b.node_->name && a.node_->children == b.node_->children;
}

bool isIdentifier(std::string_view name) {
  if (name.empty() || name == "v") return false;
  auto head = static_cast<unsigned char>(name[0]);
  if (!(std::isalpha(head) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum class Type { kEnd, kLParen, kRParen, kBang, kPlus, kStar, kWedge, kVee, kNumber, kIdent };
  Type type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto single = [&](Token::Type t) {
      out.push_back({t, std::string(1, c), start});
      ++i;
    };
    switch (c) {
      case '(': single(Token::Type::kLParen); continue;
      case ')': single(Token::Type::kRParen); continue;
      case '!': single(Token::Type::kBang); continue;
      case '+': single(Token::Type::kPlus); continue;
      case '*': single(Token::Type::kStar); continue;
      case '^': single(Token::Type::kWedge); continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < in.size() && (std::isdigit(static_cast<unsigned char>(in[i])) || in[i] == '/')) {
        ++i;
      }
      out.push_back({Token::Type::kNumber, std::string(in.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < in.size() && (std::isalnum(static_cast<unsigned char>(in[i])) || in[i] == '_')) {
        ++i;
      }
      std::string word(in.substr(start, i - start));
      out.push_back({word == "v" ? Token::Type::kVee : Token::Type::kIdent, word, start});
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "' at position " +
                         std::to_string(i),
                     i);
  }
  out.push_back({Token::Type::kEnd, "", in.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Term parse() {
    Term t = parseJoin();
    if (peek().type != Token::Type::kEnd) fail("unexpected '" + peek().text + "'");
    return t;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(peek().pos), peek().pos);
  }

  template <typename Sub>
  Term leftAssoc(Token::Type op, Term::Kind kind, Sub sub) {
    Term lhs = (this->*sub)();
    while (peek().type == op) {
      next();
      lhs = Term::binary(kind, std::move(lhs), (this->*sub)());
    }
    return lhs;
  }

  Term parseJoin() { return leftAssoc(Token::Type::kVee, Term::Kind::kJoin, &Parser::parseMeet); }
  Term parseMeet() {
    return leftAssoc(Token::Type::kWedge, Term::Kind::kMeet, &Parser::parseOplus);
  }
  Term parseOplus() {
    return leftAssoc(Token::Type::kPlus, Term::Kind::kOplus, &Parser::parseOdot);
  }
  Term parseOdot() {
    return leftAssoc(Token::Type::kStar, Term::Kind::kOdot, &Parser::parseUnary);
  }

  Term parseUnary() {
    if (peek().type == Token::Type::kBang) {
      next();
      return Term::negation(parseUnary());
    }
    return parsePrimary();
  }

  Term parsePrimary() {
    const Token& tok = peek();
    switch (tok.type) {
      case Token::Type::kLParen: {
        next();
        Term inner = parseJoin();
        if (peek().type != Token::Type::kRParen) fail("expected ')'");
        next();
        return inner;
      }
      case Token::Type::kIdent: next(); return Term::var(tok.text);
      case Token::Type::kNumber: {
        next();
        Fraction f;
        try {
          f = Fraction::parse(tok.text);
        } catch (const ParseError& e) {
          throw ParseError(std::string(e.what()) + " at position " + std::to_string(tok.pos),
                           tok.pos);
        }
        if (tok.text == "0") return Term::zero();
        if (tok.text == "1") return Term::one();
        return Term::constant(f);
      }
      case Token::Type::kEnd: fail("unexpected end of input");
      default: fail("unexpected '" + tok.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(Term::Kind k) {
  switch (k) {
    case Term::Kind::kJoin: return 1;
    case Term::Kind::kMeet: return 2;
    case Term::Kind::kOplus: return 3;
    case Term::Kind::kOdot: return 4;
    case Term::Kind::kNeg: return 5;
    default: return 6;
  }
}

const char* binarySymbol(Term::Kind k) {
  switch (k) {
    case Term::Kind::kJoin: return " v ";
    case Term::Kind::kMeet: return " ^ ";
    case Term::Kind::kOplus: return " + ";
    case Term::Kind::kOdot: return " * ";
    default: return " ? ";
  }
}

void print(const Term& t, int minPrec, std::string& out) {
  const int prec = precedence(t.kind());
  const bool parens = prec < minPrec;
  if (parens) out += '(';
  switch (t.kind()) {
    case Term::Kind::kZero: out += '0'; break;
    case Term::Kind::kOne: out += '1'; break;
    case Term::Kind::kConstant: out += t.value().str(); break;
    case Term::Kind::kVar: out += t.name(); break;
    case Term::Kind::kNeg:
      out += '!';
      print(t.operand(), prec, out);
      break;
    default:
      print(t.lhs(), prec, out);
      out += binarySymbol(t.kind());
      print(t.rhs(), prec + 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Term parseTerm(std::string_view input) { return Parser{tokenize(input)}.parse(); }

std::string printTerm(const Term& t) {
  std::string out;
  print(t, 0, out);
  return out;
}

Element evalTerm(const Term& t, const Environment& env, const FiniteMV& algebra) {
  switch (t.kind()) {
    case Term::Kind::kZero: return algebra.zero();
    case Term::Kind::kOne: return algebra.one();
    case Term::Kind::kConstant: {
      for (auto m : algebra.orders()) {
        if (m % t.value().den() != 0) {
          throw AlgebraError("constant " + t.value().str() + " is not in " + algebra.str());
        }
      }
      return algebra.constant(t.value());
    }
    case Term::Kind::kVar: {
      auto it = env.find(t.name());
      if (it == env.end()) throw AlgebraError("unbound variable '" + t.name() + "'");
      algebra.require(it->second);
      return it->second;
    }
    case Term::Kind::kNeg: return neg(evalTerm(t.operand(), env, algebra));
    case Term::Kind::kOplus:
      return oplus(evalTerm(t.lhs(), env, algebra), evalTerm(t.rhs(), env, algebra));
    case Term::Kind::kOdot:
      return odot(evalTerm(t.lhs(), env, algebra), evalTerm(t.rhs(), env, algebra));
    case Term::Kind::kJoin:
      return join(evalTerm(t.lhs(), env, algebra), evalTerm(t.rhs(), env, algebra));
    case Term::Kind::kMeet:
      return meet(evalTerm(t.lhs(), env, algebra), evalTerm(t.rhs(), env, algebra));
  }
  throw AlgebraError("unknown term kind");
}

// ---------------------------------------------------------------------------
// Generated subalgebras

bool Subalgebra::contains(const Element& e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

bool Subalgebra::verify(std::span<const Element> generators) const {
  if (discovery.size() != certificate.size()) return false;
  std::set<Element> gens(generators.begin(), generators.end());
  for (std::size_t k = 0; k < discovery.size(); ++k) {
    const auto& step = certificate[k];
    switch (step.rule) {
      case ClosureStep::Rule::kZero:
        if (discovery[k] != ambient.zero()) return false;
        break;
      case ClosureStep::Rule::kGenerator:
        if (!gens.contains(discovery[k])) return false;
        break;
      case ClosureStep::Rule::kNeg:
        if (step.lhs >= k || discovery[k] != neg(discovery[step.lhs])) return false;
        break;
      case ClosureStep::Rule::kOplus:
        if (step.lhs >= k || step.rhs >= k ||
            discovery[k] != oplus(discovery[step.lhs], discovery[step.rhs])) {
          return false;
        }
        break;
    }
  }
  auto sorted = discovery;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != elements) return false;
  for (const auto& g : gens) {
    if (!contains(g)) return false;
  }
  for (const auto& x : elements) {
    if (!contains(neg(x))) return false;
    for (const auto& y : elements) {
      if (!contains(oplus(x, y))) return false;
    }
  }
  return true;
}

Subalgebra generatedSubalgebra(const FiniteMV& algebra, std::span<const Element> generators) {
  std::vector<Element> seeds(generators.begin(), generators.end());
  for (const auto& g : seeds) algebra.require(g);
  std::sort(seeds.begin(), seeds.end());

  Subalgebra out;
  out.ambient = algebra;
  std::set<Element> seen;
  auto add = [&](Element e, ClosureStep step) {
    if (seen.insert(e).second) {
      out.discovery.push_back(std::move(e));
      out.certificate.push_back(step);
    }
  };
  add(algebra.zero(), {ClosureStep::Rule::kZero});
  for (auto& g : seeds) add(g, {ClosureStep::Rule::kGenerator});

  for (std::size_t cur = 0; cur < out.discovery.size(); ++cur) {
    const Element x = out.discovery[cur];
    add(neg(x), {ClosureStep::Rule::kNeg, cur});
    for (std::size_t j = 0; j <= cur; ++j) {
      add(oplus(x, out.discovery[j]), {ClosureStep::Rule::kOplus, cur, j});
    }
  }
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

std::vector<std::int64_t> indecomposableFactors(std::span<const Element> subalgebra) {
  std::vector<Element> booleans;
  for (const auto& s : subalgebra) {
    if (oplus(s, s) == s) booleans.push_back(s);
  }
  std::vector<std::int64_t> orders;
  for (const auto& b : booleans) {
    if (std::all_of(b.coords.begin(), b.coords.end(), [](const Fraction& f) { return f.isZero(); })) {
      continue;
    }
    bool atom = std::none_of(booleans.begin(), booleans.end(), [&](const Element& c) {
      return c != b && lessEq(c, b) &&
             std::any_of(c.coords.begin(), c.coords.end(),
                         [](const Fraction& f) { return !f.isZero(); });
    });
    if (!atom) continue;
    auto below = std::count_if(subalgebra.begin(), subalgebra.end(),
                               [&](const Element& s) { return lessEq(s, b); });
    orders.push_back(static_cast<std::int64_t>(below) - 1);
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

namespace {

OrderRank rankInEnvelope(const Element& a) {
  std::vector<std::int64_t> dens;
  dens.reserve(a.size());
  for (const auto& f : a.coords) dens.push_back(f.den());
  FiniteMV envelope{std::move(dens)};
  OrderRank out;
  out.generated = generatedSubalgebra(envelope, std::span<const Element>(&a, 1));
  out.factorOrders = indecomposableFactors(out.generated.elements);
  out.rank = out.factorOrders.size();
  return out;
}

}  // namespace

OrderRank orderRank(const FiniteMV& algebra, const Element& a) {
  algebra.require(a);
  return rankInEnvelope(a);
}

OrderRank orderRank(const RationalProduct& algebra, const Element& a) {
  algebra.require(a);
  return rankInEnvelope(a);
}

}  // namespace mvsep
