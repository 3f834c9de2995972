#include "acg/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <vector>

namespace acg {

namespace {

struct Token {
  enum class Type { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Type type;
  std::size_t pos = 0;
  double num = 0.0;
  bool is_int = false;  // digits only: usable as a Pow exponent
  std::string text;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = src_.size();
    while (i < n) {
      const char c = src_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(lex_number(i));
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = i;
        while (i < n && std::isalnum(static_cast<unsigned char>(src_[i]))) ++i;
        out.push_back({Token::Type::Ident, start, 0.0, false, src_.substr(start, i - start)});
        continue;
      }
      Token t{Token::Type::End, i};
      switch (c) {
        case '+': t.type = Token::Type::Plus; break;
        case '-': t.type = Token::Type::Minus; break;
        case '*': t.type = Token::Type::Star; break;
        case '/': t.type = Token::Type::Slash; break;
        case '^': t.type = Token::Type::Caret; break;
        case '(': t.type = Token::Type::LParen; break;
        case ')': t.type = Token::Type::RParen; break;
        default:
          throw ParseError("unexpected character '" + std::string(1, c) + "'", i,
                           "number, identifier, operator or parenthesis");
      }
      ++i;
      out.push_back(t);
    }
    out.push_back({Token::Type::End, n});
    return out;
  }

private:
  Token lex_number(std::size_t& i) {
    const std::size_t start = i;
    const std::size_t n = src_.size();
    bool is_int = true;
    while (i < n && std::isdigit(static_cast<unsigned char>(src_[i]))) ++i;
    if (i < n && src_[i] == '.') {
      is_int = false;
      ++i;
      while (i < n && std::isdigit(static_cast<unsigned char>(src_[i]))) ++i;
    }
    if (i < n && (src_[i] == 'e' || src_[i] == 'E')) {
      std::size_t save = i;
      ++i;
      if (i < n && (src_[i] == '+' || src_[i] == '-')) ++i;
      if (i < n && std::isdigit(static_cast<unsigned char>(src_[i]))) {
        is_int = false;
        while (i < n && std::isdigit(static_cast<unsigned char>(src_[i]))) ++i;
      } else {
        i = save;  // 'e' belongs to a following identifier, not this number
      }
    }
    Token t{Token::Type::Num, start};
    t.text = src_.substr(start, i - start);
    t.num = std::strtod(t.text.c_str(), nullptr);
    t.is_int = is_int;
    return t;
  }

  const std::string& src_;
};

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

class Parser {
public:
  Parser(std::vector<Token> toks, int dim) : toks_(std::move(toks)), dim_(dim) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    expect(Token::Type::End, "operator or end of input");
    return e;
  }

private:
  const Token& cur() const { return toks_[pos_]; }
  void advance() { ++pos_; }

  void expect(Token::Type t, const std::string& what) {
    if (cur().type != t)
      throw ParseError("unexpected token", cur().pos, what);
    advance();
  }

  static ExprPtr mk(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

  ExprPtr parse_expr() {
    ExprPtr left = parse_term();
    while (cur().type == Token::Type::Plus || cur().type == Token::Type::Minus) {
      const bool plus = cur().type == Token::Type::Plus;
      const std::size_t at = cur().pos;
      advance();
      ExprPtr right = parse_term();
      ExprNode n;
      n.kind = plus ? ExprNode::Kind::Add : ExprNode::Kind::Sub;
      n.a = left;
      n.b = right;
      n.offset = at;
      left = mk(std::move(n));
    }
    return left;
  }

  ExprPtr parse_term() {
    ExprPtr left = parse_factor();
    while (cur().type == Token::Type::Star || cur().type == Token::Type::Slash) {
      const bool star = cur().type == Token::Type::Star;
      const std::size_t at = cur().pos;
      advance();
      ExprPtr right = parse_factor();
      ExprNode n;
      n.kind = star ? ExprNode::Kind::Mul : ExprNode::Kind::Div;
      n.a = left;
      n.b = right;
      n.offset = at;
      left = mk(std::move(n));
    }
    return left;
  }

  ExprPtr parse_factor() {
    if (cur().type == Token::Type::Minus) {
      const std::size_t at = cur().pos;
      advance();
      ExprNode n;
      n.kind = ExprNode::Kind::Neg;
      n.a = parse_factor();
      n.offset = at;
      return mk(std::move(n));
    }
    ExprPtr base = parse_atom();
    if (cur().type == Token::Type::Caret) {
      const std::size_t at = cur().pos;
      advance();
      int sign = 1;
      if (cur().type == Token::Type::Minus) {
        sign = -1;
        advance();
      }
      if (cur().type != Token::Type::Num || !cur().is_int)
        throw ParseError("exponent must be an integer literal", cur().pos, "integer");
      ExprNode n;
      n.kind = ExprNode::Kind::Pow;
      n.a = base;
      n.exponent = sign * static_cast<int>(cur().num);
      n.offset = at;
      advance();
      return mk(std::move(n));
    }
    return base;
  }

  ExprPtr parse_atom() {
    const Token& t = cur();
    switch (t.type) {
      case Token::Type::Num: {
        ExprNode n;
        n.kind = ExprNode::Kind::Number;
        n.number = t.num;
        n.offset = t.pos;
        advance();
        return mk(std::move(n));
      }
      case Token::Type::LParen: {
        advance();
        ExprPtr e = parse_expr();
        expect(Token::Type::RParen, "')'");
        return e;
      }
      case Token::Type::Ident:
        return parse_ident();
      default:
        throw ParseError("unexpected token", t.pos,
                         "number, 'I', variable, function call or '('");
    }
  }

  ExprPtr parse_ident() {
    const Token t = cur();
    advance();
    const std::string& s = t.text;
    if (s == "I") {
      ExprNode n;
      n.kind = ExprNode::Kind::ImagUnit;
      n.offset = t.pos;
      return mk(std::move(n));
    }
    static const std::pair<const char*, UnaryFunc> funcs[] = {
        {"exp", UnaryFunc::Exp}, {"sin", UnaryFunc::Sin},   {"cos", UnaryFunc::Cos},
        {"re", UnaryFunc::Re},   {"im", UnaryFunc::Im},     {"conj", UnaryFunc::Conj},
        {"abs2", UnaryFunc::Abs2}};
    for (const auto& [name, f] : funcs) {
      if (s == name) {
        expect(Token::Type::LParen, "'(' after function name");
        ExprPtr arg = parse_expr();
        expect(Token::Type::RParen, "')'");
        ExprNode n;
        n.kind = ExprNode::Kind::Call;
        n.func = f;
        n.a = arg;
        n.offset = t.pos;
        return mk(std::move(n));
      }
    }
    ExprNode n;
    n.offset = t.pos;
    std::string digits;
    if (s.size() > 4 && s.rfind("zbar", 0) == 0 && all_digits(s.substr(4))) {
      n.kind = ExprNode::Kind::Zbar;
      digits = s.substr(4);
    } else if (s.size() > 1 && s[0] == 'z' && all_digits(s.substr(1))) {
      n.kind = ExprNode::Kind::Z;
      digits = s.substr(1);
    } else if (s.size() > 1 && s[0] == 'x' && all_digits(s.substr(1))) {
      n.kind = ExprNode::Kind::Coord;
      digits = s.substr(1);
    } else {
      throw ParseError("unknown identifier '" + s + "'", t.pos,
                       "x<k>, z<k>, zbar<k>, function name or 'I'");
    }
    n.index = std::atoi(digits.c_str());
    const int limit = (n.kind == ExprNode::Kind::Coord) ? dim_ : dim_ / 2;
    if (n.index < 1 || n.index > limit)
      throw ParseError("variable index out of range: '" + s + "' (ambient dimension " +
                           std::to_string(dim_) + ")",
                       t.pos, "index in 1.." + std::to_string(limit));
    return mk(std::move(n));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int dim_;
};

}  // namespace

Expr parse(const std::string& source, int ambient_dim) {
  if (ambient_dim < 2 || ambient_dim % 2 != 0)
    throw std::invalid_argument("ambient dimension must be even and >= 2");
  Lexer lex(source);
  Parser p(lex.run(), ambient_dim);
  return Expr{p.run(), ambient_dim};
}

namespace {

// Precedence bands for the printer; higher binds tighter.
constexpr int kPrecAdd = 10;
constexpr int kPrecMul = 20;
constexpr int kPrecNeg = 30;
constexpr int kPrecPow = 40;
constexpr int kPrecAtom = 100;

std::string format_number(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, end);
}

const char* func_name(UnaryFunc f) {
  switch (f) {
    case UnaryFunc::Exp: return "exp";
    case UnaryFunc::Sin: return "sin";
    case UnaryFunc::Cos: return "cos";
    case UnaryFunc::Re: return "re";
    case UnaryFunc::Im: return "im";
    case UnaryFunc::Conj: return "conj";
    case UnaryFunc::Abs2: return "abs2";
  }
  return "?";
}

void print_node(const ExprPtr& e, int min_prec, std::string& out) {
  using K = ExprNode::Kind;
  auto paren = [&](int prec, auto&& body) {
    if (prec < min_prec) {
      out += '(';
      body();
      out += ')';
    } else {
      body();
    }
  };
  switch (e->kind) {
    case K::Number: out += format_number(e->number); break;
    case K::ImagUnit: out += 'I'; break;
    case K::Coord: out += 'x' + std::to_string(e->index); break;
    case K::Z: out += 'z' + std::to_string(e->index); break;
    case K::Zbar: out += "zbar" + std::to_string(e->index); break;
    case K::Add:
      paren(kPrecAdd, [&] {
        print_node(e->a, kPrecAdd, out);
        out += " + ";
        print_node(e->b, kPrecAdd + 1, out);
      });
      break;
    case K::Sub:
      paren(kPrecAdd, [&] {
        print_node(e->a, kPrecAdd, out);
        out += " - ";
        print_node(e->b, kPrecAdd + 1, out);
      });
      break;
    case K::Mul:
      paren(kPrecMul, [&] {
        print_node(e->a, kPrecMul, out);
        out += "*";
        print_node(e->b, kPrecMul + 1, out);
      });
      break;
    case K::Div:
      paren(kPrecMul, [&] {
        print_node(e->a, kPrecMul, out);
        out += "/";
        print_node(e->b, kPrecMul + 1, out);
      });
      break;
    case K::Neg:
      paren(kPrecNeg, [&] {
        out += '-';
        print_node(e->a, kPrecNeg, out);
      });
      break;
    case K::Pow:
      paren(kPrecPow, [&] {
        print_node(e->a, kPrecAtom, out);
        out += '^';
        out += std::to_string(e->exponent);
      });
      break;
    case K::Call:
      out += func_name(e->func);
      out += '(';
      print_node(e->a, 0, out);
      out += ')';
      break;
  }
}

}  // namespace

std::string to_string(const ExprPtr& node) {
  std::string out;
  print_node(node, 0, out);
  return out;
}

std::string to_string(const Expr& e) { return to_string(e.root); }

namespace {

Jet eval_node(const ExprPtr& e, const Eigen::VectorXd& p, int dim) {
  using K = ExprNode::Kind;
  switch (e->kind) {
    case K::Number: return Jet::constant(Complex(e->number, 0.0), dim);
    case K::ImagUnit: return Jet::constant(Complex(0.0, 1.0), dim);
    case K::Coord: return Jet::coordinate(p[e->index - 1], e->index - 1, dim);
    case K::Z: {
      Jet j(dim);
      const int re = 2 * e->index - 2, im = 2 * e->index - 1;
      j.v = Complex(p[re], p[im]);
      j.g[re] = Complex(1.0, 0.0);
      j.g[im] = Complex(0.0, 1.0);
      return j;
    }
    case K::Zbar: {
      Jet j(dim);
      const int re = 2 * e->index - 2, im = 2 * e->index - 1;
      j.v = Complex(p[re], -p[im]);
      j.g[re] = Complex(1.0, 0.0);
      j.g[im] = Complex(0.0, -1.0);
      return j;
    }
    case K::Add: return eval_node(e->a, p, dim) + eval_node(e->b, p, dim);
    case K::Sub: return eval_node(e->a, p, dim) - eval_node(e->b, p, dim);
    case K::Mul: return eval_node(e->a, p, dim) * eval_node(e->b, p, dim);
    case K::Div: {
      Jet num = eval_node(e->a, p, dim);
      Jet den = eval_node(e->b, p, dim);
      if (den.v == Complex(0.0, 0.0)) throw EvalError("division by zero", to_string(e));
      return num * jet_inv(den);
    }
    case K::Neg: return -eval_node(e->a, p, dim);
    case K::Pow: {
      Jet base = eval_node(e->a, p, dim);
      if (e->exponent < 0) {
        if (base.v == Complex(0.0, 0.0))
          throw EvalError("zero base with negative exponent", to_string(e));
        return jet_inv(jet_pow(base, -e->exponent));
      }
      return jet_pow(base, e->exponent);
    }
    case K::Call: {
      Jet a = eval_node(e->a, p, dim);
      switch (e->func) {
        case UnaryFunc::Exp: return jet_exp(a);
        case UnaryFunc::Sin: return jet_sin(a);
        case UnaryFunc::Cos: return jet_cos(a);
        case UnaryFunc::Re: return jet_re(a);
        case UnaryFunc::Im: return jet_im(a);
        case UnaryFunc::Conj: return jet_conj(a);
        case UnaryFunc::Abs2: return a * jet_conj(a);
      }
      break;
    }
  }
  throw std::logic_error("unreachable expression node");
}

}  // namespace

Jet eval_jet(const Expr& e, const Eigen::VectorXd& p) {
  if (p.size() != e.dim)
    throw std::invalid_argument("point dimension does not match expression ambient dimension");
  return eval_node(e.root, p, e.dim);
}

}  // namespace acg
