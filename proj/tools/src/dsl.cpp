#include "pdnf/app/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <set>
#include <sstream>

namespace pdnf::app {
namespace {

enum class Tok { ident, number, plus, minus, star, slash, caret, lparen, rparen, equals, semi, comma, lbrace, rbrace, end };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::number: return "number";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::slash: return "'/'";
    case Tok::caret: return "'^'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::equals: return "'='";
    case Tok::semi: return "';'";
    case Tok::comma: return "','";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::end: return "end of input";
  }
  return "token";
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    const int l = line, cc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '.') throw ParseError("decimal literals are not exact; write p/q", l, cc);
      out.push_back({Tok::number, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    Tok t;
    switch (c) {
      case '+': t = Tok::plus; break;
      case '-': t = Tok::minus; break;
      case '*': t = Tok::star; break;
      case '/': t = Tok::slash; break;
      case '^': t = Tok::caret; break;
      case '(': t = Tok::lparen; break;
      case ')': t = Tok::rparen; break;
      case '=': t = Tok::equals; break;
      case ';': t = Tok::semi; break;
      case ',': t = Tok::comma; break;
      case '{': t = Tok::lbrace; break;
      case '}': t = Tok::rbrace; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
    }
    out.push_back({t, std::string(1, c), l, cc});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

struct Node {
  enum Kind { num, sym, add, sub, mul, div, neg, pow } kind;
  std::string text;  // literal digits or identifier
  unsigned exponent = 0;
  std::unique_ptr<Node> lhs, rhs;
  int line = 0, col = 0;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind k, const Token& at, NodePtr a = {}, NodePtr b = {}) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->line = at.line;
  n->col = at.col;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

struct Equation {
  Token lhs;       // the identifier after the 'd'
  NodePtr rhs;
};

struct RawSymmetry {
  Token name;
  std::vector<Equation> eqs;
};

struct RawParam {
  Token name;
  Rational value;
};

struct Ast {
  std::vector<Token> vars;
  std::vector<RawParam> params;
  std::vector<Equation> eqs;
  std::vector<RawSymmetry> syms;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  Ast parse() {
    Ast ast;
    while (peek().kind != Tok::end) {
      const Token& head = expect(Tok::ident, "a declaration");
      if (head.text == "vars") {
        ast.vars.push_back(expect(Tok::ident, "a variable name"));
        while (accept(Tok::comma)) ast.vars.push_back(expect(Tok::ident, "a variable name"));
        expect(Tok::semi, "';' after the variable list");
      } else if (head.text == "params") {
        ast.params.push_back(binding());
        while (accept(Tok::comma)) ast.params.push_back(binding());
        expect(Tok::semi, "';' after the parameter list");
      } else if (head.text == "symmetry") {
        RawSymmetry sym{expect(Tok::ident, "a symmetry name"), {}};
        expect(Tok::lbrace, "'{'");
        while (!accept(Tok::rbrace)) sym.eqs.push_back(equation(expect(Tok::ident, "an equation or '}'")));
        ast.syms.push_back(std::move(sym));
      } else {
        ast.eqs.push_back(equation(head));
      }
    }
    return ast;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  const Token& next() { return t_[pos_ == t_.size() - 1 ? pos_ : pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail("expected " + what + ", found " + found());
    return next();
  }
  std::string found() const {
    const Token& p = peek();
    return p.kind == Tok::ident || p.kind == Tok::number ? "'" + p.text + "'" : describe(p.kind);
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().col); }

  RawParam binding() {
    RawParam p{expect(Tok::ident, "a parameter name"), {}};
    expect(Tok::equals, "'=' in the parameter binding");
    bool neg = accept(Tok::minus);
    if (!neg) accept(Tok::plus);
    Rational v(mpz_class(expect(Tok::number, "a rational literal").text));
    if (accept(Tok::slash)) {
      const Token& d = expect(Tok::number, "a denominator");
      mpz_class den(d.text);
      if (den == 0) throw ParseError("zero denominator", d.line, d.col);
      v /= Rational(den);
    }
    p.value = neg ? Rational(-v) : v;
    return p;
  }

  // head is "d" (variable follows) or "d<var>".
  Equation equation(const Token& head) {
    Token var = head;
    if (head.text == "d") {
      var = expect(Tok::ident, "a variable name after 'd'");
    } else if (head.text.size() > 1 && head.text[0] == 'd') {
      var.text = head.text.substr(1);
      ++var.col;
    } else {
      throw ParseError("expected a declaration (vars, params, symmetry, or d<var> = ...), found '" + head.text + "'",
                       head.line, head.col);
    }
    expect(Tok::equals, "'='");
    Equation eq{var, expr()};
    expect(Tok::semi, "';' after the expression");
    return eq;
  }

  bool operand_follows() const {
    const Tok k = peek().kind;
    return k == Tok::ident || k == Tok::number || k == Tok::lparen || k == Tok::minus || k == Tok::plus;
  }

  const Token& binary_operator() {
    const Token& op = next();
    if (!operand_follows()) throw ParseError("dangling operator '" + op.text + "' before " + found(), op.line, op.col);
    return op;
  }

  NodePtr expr() {
    NodePtr n = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& op = binary_operator();
      n = make(op.kind == Tok::plus ? Node::add : Node::sub, op, std::move(n), term());
    }
    return n;
  }

  NodePtr term() {
    NodePtr n = unary();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const Token& op = binary_operator();
      n = make(op.kind == Tok::star ? Node::mul : Node::div, op, std::move(n), unary());
    }
    if (peek().kind == Tok::ident || peek().kind == Tok::number || peek().kind == Tok::lparen)
      fail("missing '*' before " + found());
    return n;
  }

  NodePtr unary() {
    if (peek().kind == Tok::minus) {
      const Token& op = next();
      return make(Node::neg, op, unary());
    }
    if (accept(Tok::plus)) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (peek().kind != Tok::caret) return base;
    const Token& op = next();
    if (peek().kind == Tok::minus) fail("negative exponents are not polynomial");
    const Token& e = expect(Tok::number, "a non-negative integer exponent");
    if (peek().kind == Tok::slash) fail("fractional exponents are not polynomial");
    if (peek().kind == Tok::caret) fail("chained exponents need parentheses");
    if (e.text.size() > 3 || std::stoul(e.text) > 200) throw ParseError("exponent too large", e.line, e.col);
    NodePtr n = make(Node::pow, op, std::move(base));
    n->exponent = static_cast<unsigned>(std::stoul(e.text));
    return n;
  }

  NodePtr primary() {
    const Token& tok = peek();
    if (tok.kind == Tok::number) {
      next();
      auto n = make(Node::num, tok);
      n->text = tok.text;
      return n;
    }
    if (tok.kind == Tok::ident) {
      next();
      auto n = make(Node::sym, tok);
      n->text = tok.text;
      return n;
    }
    if (accept(Tok::lparen)) {
      NodePtr n = expr();
      expect(Tok::rparen, "')'");
      return n;
    }
    fail("expected an operand, found " + found());
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

constexpr unsigned kNoTruncation = 1u << 30;

class Resolver {
 public:
  Resolver(const std::vector<std::string>& symbols) : symbols_(symbols) {}

  Polynomial eval(const Node& n) const {
    const std::size_t dim = symbols_.size();
    switch (n.kind) {
      case Node::num: return Polynomial::constant(dim, Rational(mpz_class(n.text)));
      case Node::sym: {
        auto it = std::find(symbols_.begin(), symbols_.end(), n.text);
        if (it == symbols_.end()) throw ParseError("undeclared identifier '" + n.text + "'", n.line, n.col);
        return Polynomial::variable(dim, static_cast<std::size_t>(it - symbols_.begin()));
      }
      case Node::add: return eval(*n.lhs) + eval(*n.rhs);
      case Node::sub: return eval(*n.lhs) - eval(*n.rhs);
      case Node::neg: return Polynomial(dim) - eval(*n.lhs);
      case Node::mul: return multiply(eval(*n.lhs), eval(*n.rhs), kNoTruncation);
      case Node::div: {
        Polynomial d = eval(*n.rhs);
        if (d.degree() > 0)
          throw ParseError("division by a non-constant expression", n.line, n.col);
        Rational c = d.coefficient(Monomial(dim));
        if (sgn(c) == 0) throw ParseError("division by zero", n.line, n.col);
        Polynomial r = eval(*n.lhs);
        r *= Rational(1 / c);
        return r;
      }
      case Node::pow: {
        Polynomial base = eval(*n.lhs);
        Polynomial r = Polynomial::constant(dim, Rational(1));
        for (unsigned i = 0; i < n.exponent; ++i) r = multiply(r, base, kNoTruncation);
        return r;
      }
    }
    return Polynomial(dim);
  }

 private:
  const std::vector<std::string>& symbols_;
};

std::vector<Polynomial> resolve_equations(const std::vector<Equation>& eqs, const std::vector<std::string>& vars,
                                          const Resolver& r, const Token* owner) {
  std::vector<std::optional<Polynomial>> rhs(vars.size());
  for (const auto& eq : eqs) {
    auto it = std::find(vars.begin(), vars.end(), eq.lhs.text);
    if (it == vars.end()) throw ParseError("equation for undeclared variable '" + eq.lhs.text + "'", eq.lhs.line, eq.lhs.col);
    auto i = static_cast<std::size_t>(it - vars.begin());
    if (rhs[i]) throw ParseError("second equation for '" + eq.lhs.text + "'", eq.lhs.line, eq.lhs.col);
    rhs[i] = r.eval(*eq.rhs);
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!rhs[i]) {
      int line = owner ? owner->line : 1, col = owner ? owner->col : 1;
      throw ParseError("missing equation for '" + vars[i] + "'" + (owner ? " in symmetry " + owner->text : ""),
                       line, col);
    }
    out.push_back(std::move(*rhs[i]));
  }
  return out;
}

}  // namespace

std::vector<std::string> FieldSpec::symbol_names() const {
  std::vector<std::string> out = vars;
  for (const auto& p : params) out.push_back(p.name);
  return out;
}

FieldSpec parse_field(std::string_view text) {
  Ast ast = Parser(lex(text)).parse();
  FieldSpec spec;
  std::set<std::string> seen;
  auto declare = [&](const Token& t) {
    if (t.text == "vars" || t.text == "params" || t.text == "symmetry")
      throw ParseError("'" + t.text + "' is a keyword", t.line, t.col);
    if (!seen.insert(t.text).second) throw ParseError("'" + t.text + "' declared twice", t.line, t.col);
  };
  for (const auto& v : ast.vars) {
    declare(v);
    spec.vars.push_back(v.text);
  }
  for (const auto& p : ast.params) {
    declare(p.name);
    spec.params.push_back({p.name.text, p.value});
  }
  if (spec.vars.empty()) throw ParseError("no variables declared (use 'vars x, y;')", 1, 1);
  std::set<std::string> sym_names;
  for (const auto& s : ast.syms)
    if (!sym_names.insert(s.name.text).second)
      throw ParseError("symmetry '" + s.name.text + "' declared twice", s.name.line, s.name.col);

  const auto symbols = spec.symbol_names();
  Resolver r(symbols);
  spec.rhs = resolve_equations(ast.eqs, spec.vars, r, nullptr);
  for (const auto& s : ast.syms) spec.symmetries.push_back({s.name.text, resolve_equations(s.eqs, spec.vars, r, &s.name)});
  return spec;
}

std::string print_spec(const FieldSpec& spec) {
  std::ostringstream os;
  const auto names = spec.symbol_names();
  os << "vars ";
  for (std::size_t i = 0; i < spec.vars.size(); ++i) os << (i ? ", " : "") << spec.vars[i];
  os << ";\n";
  if (!spec.params.empty()) {
    os << "params ";
    for (std::size_t i = 0; i < spec.params.size(); ++i)
      os << (i ? ", " : "") << spec.params[i].name << " = " << to_string(spec.params[i].value);
    os << ";\n";
  }
  for (std::size_t i = 0; i < spec.vars.size(); ++i) os << "d" << spec.vars[i] << " = " << spec.rhs[i].to_string(names) << ";\n";
  for (const auto& s : spec.symmetries) {
    os << "symmetry " << s.name << " {\n";
    for (std::size_t i = 0; i < spec.vars.size(); ++i)
      os << "  d" << spec.vars[i] << " = " << s.rhs[i].to_string(names) << ";\n";
    os << "}\n";
  }
  return os.str();
}

namespace {

std::vector<Polynomial> bind_components(const std::vector<Polynomial>& rhs, std::size_t nv,
                                        const std::vector<Rational>& values) {
  std::vector<Polynomial> out;
  for (const auto& p : rhs) {
    Polynomial q(nv);
    for (const auto& [mono, c] : p.terms()) {
      Rational coef = c;
      for (std::size_t j = 0; j < values.size(); ++j)
        for (std::uint32_t e = 0; e < mono[nv + j]; ++e) coef *= values[j];
      if (sgn(coef) == 0) continue;
      std::vector<std::uint32_t> exps(mono.exponents().begin(), mono.exponents().begin() + static_cast<std::ptrdiff_t>(nv));
      q.add_term(Monomial(std::span<const std::uint32_t>(exps)), coef);
    }
    out.push_back(std::move(q));
  }
  return out;
}

VectorField exact_field(std::vector<Polynomial> comps) {
  unsigned d = 1;
  for (const auto& c : comps) d = std::max(d, c.degree());
  return VectorField(std::move(comps), d);
}

}  // namespace

BoundField bind(const FieldSpec& spec, const Bindings& overrides) {
  BoundField out;
  out.vars = spec.vars;
  for (const auto& [name, v] : overrides) {
    bool known = std::any_of(spec.params.begin(), spec.params.end(), [&](const ParamDecl& p) { return p.name == name; });
    if (!known) throw PreconditionError("unknown parameter '" + name + "'");
  }
  std::vector<Rational> values;
  for (const auto& p : spec.params) {
    auto it = overrides.find(p.name);
    values.push_back(it == overrides.end() ? p.value : it->second);
    out.params[p.name] = values.back();
  }
  const std::size_t nv = spec.vars.size();
  out.field = exact_field(bind_components(spec.rhs, nv, values));
  for (const auto& s : spec.symmetries) out.symmetries.push_back({s.name, exact_field(bind_components(s.rhs, nv, values))});
  return out;
}

std::pair<std::string, Rational> parse_binding(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) throw PreconditionError("expected NAME=VALUE, got '" + std::string(text) + "'");
  std::string name(text.substr(0, eq));
  name.erase(std::remove_if(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); }), name.end());
  return {name, parse_rational(text.substr(eq + 1))};
}

std::vector<Bindings> parse_grid(std::string_view text) {
  std::vector<Bindings> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ws(line);
    std::string item;
    Bindings b;
    while (ws >> item) {
      try {
        auto [name, v] = parse_binding(item);
        b[name] = v;
      } catch (const pdnf::Error& e) {
        throw ParseError(std::string("grid: ") + e.what(), lineno, 1);
      }
    }
    if (!b.empty()) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace pdnf::app
