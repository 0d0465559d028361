#include "vanish/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace vanish {

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string to_string(SetKind kind) {
  switch (kind) {
    case SetKind::Projective: return "projective";
    case SetKind::ProjectiveAlgebraic: return "projective_algebraic";
    case SetKind::Affine: return "affine";
    case SetKind::AffineAlgebraic: return "affine_algebraic";
  }
  return "?";
}

namespace {

struct Token {
  enum class Type { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
  Type type;
  std::string text;
  int line;
  int column;
};

class Lexer {
public:
  Lexer(const std::string& src, int line_offset)
      : src_(src), line_(line_offset) {}

  Token next() {
    skip_ws();
    const int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Token::Type::End, "", line, col};
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        num += advance();
      return {Token::Type::Number, num, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        id += advance();
      return {Token::Type::Ident, id, line, col};
    }
    advance();
    switch (c) {
      case '+': return {Token::Type::Plus, "+", line, col};
      case '-': return {Token::Type::Minus, "-", line, col};
      case '*': return {Token::Type::Star, "*", line, col};
      case '^': return {Token::Type::Caret, "^", line, col};
      case '(': return {Token::Type::LParen, "(", line, col};
      case ')': return {Token::Type::RParen, ")", line, col};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line,
                         col);
    }
  }

private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_;
  int col_ = 1;
};

class ExprParser {
public:
  ExprParser(const std::string& src, RingPtr ring, int line_offset)
      : lexer_(src, line_offset), ring_(std::move(ring)) {
    cur_ = lexer_.next();
  }

  Polynomial parse() {
    Polynomial p = expr();
    expect(Token::Type::End, "end of expression");
    return p;
  }

private:
  void bump() { cur_ = lexer_.next(); }

  void expect(Token::Type t, const std::string& what) {
    if (cur_.type != t)
      throw ParseError("expected " + what + ", got '" + cur_.text + "'",
                       cur_.line, cur_.column);
  }

  Polynomial expr() {
    bool negate = false;
    if (cur_.type == Token::Type::Minus) {
      negate = true;
      bump();
    }
    Polynomial p = term();
    if (negate) p = -p;
    while (cur_.type == Token::Type::Plus || cur_.type == Token::Type::Minus) {
      const bool minus = cur_.type == Token::Type::Minus;
      bump();
      Polynomial t = term();
      p = minus ? p - t : p + t;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (cur_.type == Token::Type::Star) {
      bump();
      p = p * factor();
    }
    return p;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (cur_.type == Token::Type::Caret) {
      bump();
      if (cur_.type == Token::Type::Minus)
        throw ParseError(
            "negative exponents are not allowed; move the factor to the "
            "denominator instead",
            cur_.line, cur_.column);
      expect(Token::Type::Number, "a natural-number exponent");
      const unsigned long e = std::stoul(cur_.text);
      if (e > 10000)
        throw ParseError("exponent too large", cur_.line, cur_.column);
      bump();
      return b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  Polynomial base() {
    switch (cur_.type) {
      case Token::Type::Number: {
        const std::int64_t v = std::stoll(cur_.text);
        bump();
        return Polynomial::constant(ring_, v);
      }
      case Token::Type::Ident: {
        const int idx = ring_->var_index(cur_.text);
        if (idx < 0)
          throw ParseError("unknown identifier '" + cur_.text + "'", cur_.line,
                           cur_.column);
        bump();
        return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
      }
      case Token::Type::LParen: {
        bump();
        Polynomial p = expr();
        expect(Token::Type::RParen, "')'");
        bump();
        return p;
      }
      default:
        throw ParseError("expected a number, identifier or '('", cur_.line,
                         cur_.column);
    }
  }

  Lexer lexer_;
  RingPtr ring_;
  Token cur_;
};

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool looks_like_output_var(const std::string& name) {
  if (name.size() < 2 || name[0] != 't') return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

}  // namespace

Polynomial parse_polynomial(const std::string& src, const RingPtr& ring) {
  return ExprParser(src, ring, 1).parse();
}

std::string render_monomial(const Monomial& m, const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.vars()[i];
    if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::string render(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    if (m.is_one()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += render_monomial(m, *p.ring());
    } else {
      out += std::to_string(c) + "*" + render_monomial(m, *p.ring());
    }
  }
  return out;
}

ParameterizationSpec parse_spec(const std::string& text) {
  std::map<std::string, std::pair<std::string, int>> kv;  // key -> (value, line)
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    for (const std::string& part : split(line, ';')) {
      const std::string stmt = trim(part);
      if (stmt.empty()) continue;
      const auto eq = stmt.find('=');
      if (eq == std::string::npos)
        throw ParseError("expected 'key = value'", lineno, 1);
      const std::string key = trim(stmt.substr(0, eq));
      const std::string value = trim(stmt.substr(eq + 1));
      if (key.empty() || value.empty())
        throw ParseError("empty key or value", lineno, 1);
      if (!kv.emplace(key, std::make_pair(value, lineno)).second)
        throw ParseError("duplicate key '" + key + "'", lineno, 1);
    }
  }

  auto require = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("missing key '" + key + "'", 0, 0);
    return it->second.first;
  };

  const std::string q_str = require("q");
  std::uint32_t q = 0;
  try {
    q = static_cast<std::uint32_t>(std::stoul(q_str));
  } catch (const std::exception&) {
    throw ParseError("q must be a positive integer", kv.at("q").second, 1);
  }
  PrimeField field(q);  // throws if q is not prime

  std::vector<std::string> vars;
  for (const std::string& v : split(require("vars"), ',')) {
    const std::string name = trim(v);
    if (name.empty()) throw ParseError("empty variable name in 'vars'", 0, 0);
    if (looks_like_output_var(name))
      throw ParseError("variable name '" + name +
                           "' clashes with the output variables t1..ts",
                       kv.at("vars").second, 1);
    vars.push_back(name);
  }
  RingPtr ring = make_ring(field, vars, MonomialOrder::grevlex());

  SetKind mode = SetKind::Projective;
  if (auto it = kv.find("mode"); it != kv.end()) {
    const std::string& m = it->second.first;
    if (m == "projective") mode = SetKind::Projective;
    else if (m == "projective_algebraic") mode = SetKind::ProjectiveAlgebraic;
    else if (m == "affine") mode = SetKind::Affine;
    else if (m == "affine_algebraic") mode = SetKind::AffineAlgebraic;
    else throw ParseError("unknown mode '" + m + "'", it->second.second, 1);
  }

  std::vector<RationalFunction> functions;
  for (std::size_t i = 1;; ++i) {
    auto fit = kv.find("f" + std::to_string(i));
    if (fit == kv.end()) break;
    Polynomial num = parse_polynomial(fit->second.first, ring);
    Polynomial den = Polynomial::constant(ring, 1);
    if (auto git = kv.find("g" + std::to_string(i)); git != kv.end())
      den = parse_polynomial(git->second.first, ring);
    if (den.is_zero())
      throw ParseError("g" + std::to_string(i) + " is the zero polynomial", 0,
                       0);
    functions.emplace_back(std::move(num), std::move(den));
  }
  if (functions.empty())
    throw ParseError("no functions given (expected keys f1, f2, ...)", 0, 0);
  for (const auto& [key, val] : kv) {
    if (key == "q" || key == "vars" || key == "mode") continue;
    if (key.size() >= 2 && (key[0] == 'f' || key[0] == 'g')) {
      std::size_t idx = 0;
      try {
        idx = std::stoul(key.substr(1));
      } catch (const std::exception&) {
        throw ParseError("unknown key '" + key + "'", val.second, 1);
      }
      if (idx == 0 || idx > functions.size())
        throw ParseError("key '" + key + "' has no matching f1..f" +
                             std::to_string(functions.size()),
                         val.second, 1);
      continue;
    }
    throw ParseError("unknown key '" + key + "'", val.second, 1);
  }

  return ParameterizationSpec{field, std::move(vars), std::move(functions),
                              mode, std::move(ring)};
}

ParameterizationSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

}  // namespace vanish
