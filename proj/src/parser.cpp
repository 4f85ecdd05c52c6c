#include "pcurv/parser.hpp"

#include <cctype>

namespace pcurv {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(ch)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Int, s.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(ch)) {
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Ident, s.substr(start, i - start), start});
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw ParseError(ParseErrorKind::SyntaxError, start, std::string("unexpected character '") + s[i] + "'");
    }
    out.push_back({k, std::string(1, s[i]), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

const char* tok_name(Tok k) {
  switch (k) {
    case Tok::Int: return "integer";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

constexpr unsigned long kMaxExponent = 100000;

// Rough output size, checked before products and powers so hostile input cannot stall the parser.
struct Size {
  long order = 0, degree = 0, bits = 0;
};
constexpr long kMaxOrder = 2000, kMaxDegree = 20000, kMaxBits = 1L << 22, kMaxOreWork = 4000;
constexpr double kMaxDenseWork = 2e8;

long rational_bits(const Rational& q) {
  return static_cast<long>(mpz_sizeinbase(q.num().get_mpz_t(), 2) + mpz_sizeinbase(q.den().get_mpz_t(), 2));
}

void within_budget(const Size& s, long ore_work, std::size_t pos) {
  double dense = static_cast<double>(s.degree) * static_cast<double>(s.degree) * static_cast<double>(s.bits / 64 + 1);
  if (s.order > kMaxOrder || s.degree > kMaxDegree || s.bits > kMaxBits || ore_work > kMaxOreWork || dense > kMaxDenseWork)
    throw ParseError(ParseErrorKind::SyntaxError, pos, "expression too large");
}

// Recursive descent over a value algebra V supplied by B.
template <class B>
class Parser {
 public:
  using V = typename B::Value;
  Parser(const std::string& text, B b) : toks_(tokenize(text)), b_(std::move(b)) {}

  V run() {
    V v = expr();
    if (peek().kind != Tok::End)
      throw ParseError(ParseErrorKind::SyntaxError, peek().pos,
                       std::string("expected operator or end of input, found ") + tok_name(peek().kind));
    return v;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_++]; }

  V expr() {
    V v = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool plus = take().kind == Tok::Plus;
      V r = term();
      v = plus ? b_.add(v, r) : b_.sub(v, r);
    }
    return v;
  }
  V term() {
    V v = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = take();
      std::size_t pos = peek().pos;
      V r = factor();
      Size a = b_.size(v), b = b_.size(r);
      within_budget({a.order + b.order, a.degree + b.degree, a.bits + b.bits + a.order}, a.order * b.degree, op.pos);
      v = op.kind == Tok::Star ? b_.mul(v, r) : b_.div(v, r, pos);
    }
    return v;
  }
  V factor() {
    V v = base();
    if (peek().kind == Tok::Caret) {
      take();
      const Token& e = peek();
      if (e.kind != Tok::Int)
        throw ParseError(ParseErrorKind::NonpolynomialExponent, e.pos,
                         "exponent must be a nonnegative integer literal");
      take();
      if (e.text.size() > 6 || std::stoul(e.text) > kMaxExponent)
        throw ParseError(ParseErrorKind::NonpolynomialExponent, e.pos, "exponent too large");
      const long n = static_cast<long>(std::stoul(e.text));
      Size a = b_.size(v);
      within_budget({a.order * n, a.degree * n, a.bits * n}, a.order * n * a.degree * n, e.pos);
      v = b_.pow(v, static_cast<unsigned>(n));
    }
    return v;
  }
  V base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        take();
        V v = expr();
        if (peek().kind != Tok::RParen)
          throw ParseError(ParseErrorKind::SyntaxError, peek().pos,
                           std::string("expected ')', found ") + tok_name(peek().kind));
        take();
        return v;
      }
      case Tok::Int:
        take();
        return b_.integer(BigInt(t.text, 10));
      case Tok::Ident:
        take();
        return b_.ident(t.text, t.pos);
      case Tok::Minus:
        take();
        return b_.neg(factor());
      default:
        throw ParseError(ParseErrorKind::SyntaxError, t.pos,
                         std::string("expected '(', x, Dx, integer or '-', found ") + tok_name(t.kind));
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  B b_;
};

struct OpBuilder {
  using Value = QOp;
  static QOp scalar(const QRatFun& f) { return QOp::from_ratfun(f); }
  QOp integer(const BigInt& n) const { return scalar(QRatFun::constant(QCtx{}, Rational(n))); }
  QOp ident(const std::string& name, std::size_t pos) const {
    if (name == "x") return scalar(QRatFun::x(QCtx{}));
    if (name == "Dx") return QOp::d(QCtx{}, 1);
    throw ParseError(ParseErrorKind::SyntaxError, pos, "unknown identifier '" + name + "', expected x or Dx");
  }
  QOp add(const QOp& a, const QOp& b) const { return a + b; }
  QOp sub(const QOp& a, const QOp& b) const { return a - b; }
  QOp mul(const QOp& a, const QOp& b) const { return a * b; }
  static Size size(const QOp& a) {
    Size s;
    s.order = std::max(a.order(), 0);
    for (const auto& c : a.coeffs()) {
      s.degree = std::max<long>(s.degree, c.num().degree() + c.den().degree());
      for (const auto* f : {&c.num(), &c.den()})
        for (const auto& v : f->coeffs()) s.bits = std::max(s.bits, rational_bits(v));
    }
    return s;
  }
  QOp neg(const QOp& a) const { return -a; }
  QOp div(const QOp& a, const QOp& b, std::size_t pos) const {
    if (b.order() > 0) throw ParseError(ParseErrorKind::DxInDenominator, pos, "Dx may not appear in a divisor");
    if (b.is_zero()) throw MathError(ErrorKind::DivisionByZero, "division by zero");
    return a * scalar(b.coeff(0).inv());
  }
  QOp pow(const QOp& a, unsigned e) const {
    QOp r = scalar(QRatFun::from_int(QCtx{}, 1)), b = a;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }
};

struct MultiBuilder {
  using Value = MultiRatFun;
  static MultiRatFun poly(const MultiPoly& p) { return {p, MultiPoly::constant(Rational(1))}; }
  MultiRatFun integer(const BigInt& n) const { return poly(MultiPoly::constant(Rational(n))); }
  MultiRatFun ident(const std::string& name, std::size_t pos) const {
    if (name == "x") return poly(MultiPoly::var(0));
    if (name == "y") return poly(MultiPoly::var(1));
    if (name == "z") return poly(MultiPoly::var(2));
    throw ParseError(ParseErrorKind::SyntaxError, pos, "unknown identifier '" + name + "', expected x, y or z");
  }
  static MultiRatFun simplify(MultiRatFun f) {
    if (f.den.is_constant()) {
      Rational c = f.den.constant_term();
      f.num = f.num * MultiPoly::constant(c.inv());
      f.den = MultiPoly::constant(Rational(1));
    }
    return f;
  }
  MultiRatFun add(const MultiRatFun& a, const MultiRatFun& b) const {
    if (a.den == b.den) return simplify({a.num + b.num, a.den});
    return simplify({a.num * b.den + b.num * a.den, a.den * b.den});
  }
  MultiRatFun sub(const MultiRatFun& a, const MultiRatFun& b) const { return add(a, neg(b)); }
  MultiRatFun mul(const MultiRatFun& a, const MultiRatFun& b) const {
    return simplify({a.num * b.num, a.den * b.den});
  }
  MultiRatFun neg(const MultiRatFun& a) const { return {-a.num, a.den}; }
  // dense trivariate products grow cubically, so degrees are held much lower here
  static Size size(const MultiRatFun& a) {
    Size s;
    s.degree = 1000L * std::max(a.num.total_degree(), a.den.total_degree());
    for (const auto* f : {&a.num, &a.den})
      for (const auto& [e, v] : f->terms) s.bits = std::max(s.bits, rational_bits(v));
    return s;
  }
  MultiRatFun div(const MultiRatFun& a, const MultiRatFun& b, std::size_t) const {
    if (b.num.is_zero()) throw MathError(ErrorKind::DivisionByZero, "division by zero");
    return simplify({a.num * b.den, a.den * b.num});
  }
  MultiRatFun pow(const MultiRatFun& a, unsigned e) const { return simplify({a.num.pow(e), a.den.pow(e)}); }
};

}  // namespace

QOp parse_operator(const std::string& text) { return Parser<OpBuilder>(text, OpBuilder{}).run(); }

QRatFun parse_ratfun(const std::string& text) {
  QOp op = parse_operator(text);
  if (op.order() > 0) throw ParseError(ParseErrorKind::SyntaxError, 0, "expected a rational function, found Dx");
  return op.coeff(0);
}

QPoly parse_polynomial(const std::string& text) {
  QRatFun f = parse_ratfun(text);
  if (!f.is_polynomial()) throw ParseError(ParseErrorKind::SyntaxError, 0, "expected a polynomial");
  return f.num().scaled(f.den().coeff(0).inv());
}

MultiRatFun parse_multi_ratfun(const std::string& text) {
  return Parser<MultiBuilder>(text, MultiBuilder{}).run();
}

MultiPoly parse_multi_poly(const std::string& text) {
  MultiRatFun f = parse_multi_ratfun(text);
  if (!f.den.is_constant()) throw ParseError(ParseErrorKind::SyntaxError, 0, "expected a polynomial");
  return f.num * MultiPoly::constant(f.den.constant_term().inv());
}

Rational parse_rational(const std::string& text) {
  QRatFun f = parse_ratfun(text);
  if (!f.is_constant()) throw ParseError(ParseErrorKind::SyntaxError, 0, "expected a rational number");
  return f.num().coeff(0);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), start + e.position(), e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace pcurv
