#include "zerocert/mapspec.hpp"

#include <openssl/evp.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <charconv>
#include <climits>
#include <cmath>
#include <random>

#include "zerocert/errors.hpp"

namespace zerocert {

// ---------------------------------------------------------------------------
// Expr

Expr Expr::constant(double value) {
  return Expr(std::make_shared<const Node>(Node{ExprKind::Constant, value, 0, nullptr, nullptr}));
}

Expr Expr::variable(int index) {
  if (index < 1) throw InvalidInput("variable index must be >= 1");
  return Expr(std::make_shared<const Node>(Node{ExprKind::Variable, 0.0, index, nullptr, nullptr}));
}

Expr Expr::unary(ExprKind kind, Expr operand) {
  switch (kind) {
    case ExprKind::Neg:
    case ExprKind::Sin:
    case ExprKind::Cos:
    case ExprKind::Exp:
    case ExprKind::Sqrt:
    case ExprKind::Abs:
      break;
    default:
      throw InvalidInput("not a unary operator");
  }
  return Expr(std::make_shared<const Node>(Node{kind, 0.0, 0, std::move(operand.node_), nullptr}));
}

Expr Expr::binary(ExprKind kind, Expr lhs, Expr rhs) {
  switch (kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div:
      break;
    default:
      throw InvalidInput("not a binary operator");
  }
  return Expr(
      std::make_shared<const Node>(Node{kind, 0.0, 0, std::move(lhs.node_), std::move(rhs.node_)}));
}

Expr Expr::power(Expr base, int exponent) {
  return Expr(
      std::make_shared<const Node>(Node{ExprKind::Pow, 0.0, exponent, std::move(base.node_), nullptr}));
}

namespace {

[[noreturn]] void domain_error(const char* what, std::span<const double> x) {
  throw DomainError(what, Vec(x.begin(), x.end()));
}

const char* function_name(ExprKind kind) {
  switch (kind) {
    case ExprKind::Sin: return "sin";
    case ExprKind::Cos: return "cos";
    case ExprKind::Exp: return "exp";
    case ExprKind::Sqrt: return "sqrt";
    case ExprKind::Abs: return "abs";
    default: return nullptr;
  }
}

// Printing precedence: sums 1, products 2, unary minus 3, powers 4, atoms 5.
int precedence(ExprKind kind) {
  switch (kind) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::Pow: return 4;
    default: return 5;
  }
}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

double Expr::evaluate(std::span<const double> x) const {
  const Node& n = *node_;
  double r = 0.0;
  switch (n.kind) {
    case ExprKind::Constant: return n.value;
    case ExprKind::Variable:
      if (n.index < 1 || static_cast<std::size_t>(n.index) > x.size()) {
        throw UndefinedVariable(n.index, static_cast<int>(x.size()));
      }
      return x[n.index - 1];
    case ExprKind::Neg: return -lhs().evaluate(x);
    case ExprKind::Sin: r = std::sin(lhs().evaluate(x)); break;
    case ExprKind::Cos: r = std::cos(lhs().evaluate(x)); break;
    case ExprKind::Exp: r = std::exp(lhs().evaluate(x)); break;
    case ExprKind::Abs: r = std::abs(lhs().evaluate(x)); break;
    case ExprKind::Sqrt: {
      const double a = lhs().evaluate(x);
      if (a < 0.0) domain_error("sqrt of a negative number", x);
      r = std::sqrt(a);
      break;
    }
    case ExprKind::Add: r = lhs().evaluate(x) + rhs().evaluate(x); break;
    case ExprKind::Sub: r = lhs().evaluate(x) - rhs().evaluate(x); break;
    case ExprKind::Mul: r = lhs().evaluate(x) * rhs().evaluate(x); break;
    case ExprKind::Div: {
      const double a = lhs().evaluate(x);
      const double b = rhs().evaluate(x);
      if (b == 0.0) domain_error("division by zero", x);
      r = a / b;
      break;
    }
    case ExprKind::Pow: {
      const double b = lhs().evaluate(x);
      if (b == 0.0 && n.index < 0) domain_error("division by zero", x);
      r = std::pow(b, n.index);
      break;
    }
  }
  if (!std::isfinite(r)) domain_error("non-finite value", x);
  return r;
}

int Expr::depth() const {
  int d = 0;
  if (node_->lhs) d = std::max(d, lhs().depth());
  if (node_->rhs) d = std::max(d, rhs().depth());
  return d + 1;
}

int Expr::max_variable() const {
  int v = node_->kind == ExprKind::Variable ? node_->index : 0;
  if (node_->lhs) v = std::max(v, lhs().max_variable());
  if (node_->rhs) v = std::max(v, rhs().max_variable());
  return v;
}

std::string Expr::to_string() const {
  const Node& n = *node_;
  auto wrap = [](const Expr& e, int min_prec) {
    std::string s = e.to_string();
    return precedence(e.kind()) >= min_prec ? s : "(" + s + ")";
  };
  switch (n.kind) {
    case ExprKind::Constant: {
      std::string s = format_number(n.value);
      return n.value < 0.0 || std::signbit(n.value) ? "(" + s + ")" : s;
    }
    case ExprKind::Variable: return "x" + std::to_string(n.index);
    case ExprKind::Neg: return "-" + wrap(lhs(), 4);
    case ExprKind::Sin:
    case ExprKind::Cos:
    case ExprKind::Exp:
    case ExprKind::Sqrt:
    case ExprKind::Abs: return std::string(function_name(n.kind)) + "(" + lhs().to_string() + ")";
    case ExprKind::Add: return wrap(lhs(), 1) + " + " + wrap(rhs(), 2);
    case ExprKind::Sub: return wrap(lhs(), 1) + " - " + wrap(rhs(), 2);
    case ExprKind::Mul: return wrap(lhs(), 2) + " * " + wrap(rhs(), 3);
    case ExprKind::Div: return wrap(lhs(), 2) + " / " + wrap(rhs(), 3);
    case ExprKind::Pow: return wrap(lhs(), 5) + "^" + std::to_string(n.index);
  }
  return {};
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.index != y.index) return false;
  if (x.kind == ExprKind::Constant) {
    return x.value == y.value && std::signbit(x.value) == std::signbit(y.value);
  }
  if (static_cast<bool>(x.lhs) != static_cast<bool>(y.lhs)) return false;
  if (static_cast<bool>(x.rhs) != static_cast<bool>(y.rhs)) return false;
  if (x.lhs && !(a.lhs() == b.lhs())) return false;
  if (x.rhs && !(a.rhs() == b.rhs())) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Number, Var, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string_view text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const int line = line_;
      const int col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, {}, line, col});
        return out;
      }
      const char c = src_[pos_];
      const std::size_t start = pos_;
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        lex_number();
        out.push_back({Tok::Number, src_.substr(start, pos_ - start), line, col});
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        if (c == 'x' && pos_ + 1 < src_.size() &&
            std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
          advance();
          while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
          out.push_back({Tok::Var, src_.substr(start, pos_ - start), line, col});
        } else {
          while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) advance();
          out.push_back({Tok::Ident, src_.substr(start, pos_ - start), line, col});
        }
      } else {
        Tok kind;
        switch (c) {
          case '+': kind = Tok::Plus; break;
          case '-': kind = Tok::Minus; break;
          case '*': kind = Tok::Star; break;
          case '/': kind = Tok::Slash; break;
          case '^': kind = Tok::Caret; break;
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          case ',': kind = Tok::Comma; break;
          default:
            throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
        }
        advance();
        out.push_back({kind, src_.substr(start, 1), line, col});
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  bool digit_at(std::size_t p) const {
    return p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]));
  }

  void lex_number() {
    while (digit_at(pos_)) advance();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      advance();
      while (digit_at(pos_)) advance();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (digit_at(p)) {
        while (pos_ < p) advance();
        while (digit_at(pos_)) advance();
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, int n) : toks_(std::move(tokens)), n_(n) {}

  std::vector<Expr> parse_map() {
    std::vector<Expr> out;
    out.push_back(parse_component());
    while (peek().kind == Tok::Comma) {
      next();
      out.push_back(parse_component());
    }
    if (peek().kind != Tok::End) fail("expected ',' or end of input");
    return out;
  }

 private:
  static constexpr int kMaxNesting = 256;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + std::string(t.text) + "'";
    throw SyntaxError(msg + ", found " + found, t.line, t.column);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    next();
  }

  Expr parse_component() {
    const Token& start = peek();
    Expr e = parse_expr();
    if (e.depth() > kMaxExprDepth) {
      throw SyntaxError("expression depth exceeds " + std::to_string(kMaxExprDepth), start.line,
                        start.column);
    }
    return e;
  }

  Expr parse_expr() {
    if (++nesting_ > kMaxNesting) fail("expression nested too deeply");
    Expr lhs = parse_term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const ExprKind op = next().kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub;
      lhs = Expr::binary(op, std::move(lhs), parse_term());
    }
    --nesting_;
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const ExprKind op = next().kind == Tok::Star ? ExprKind::Mul : ExprKind::Div;
      lhs = Expr::binary(op, std::move(lhs), parse_factor());
    }
    return lhs;
  }

  Expr parse_factor() {
    bool negate = false;
    if (peek().kind == Tok::Minus) {
      next();
      negate = true;
    }
    Expr e = parse_atom();
    if (peek().kind == Tok::Caret) {
      next();
      e = Expr::power(std::move(e), parse_exponent());
    }
    return negate ? Expr::unary(ExprKind::Neg, std::move(e)) : e;
  }

  int parse_exponent() {
    const Token& first = peek();
    bool negative = false;
    if (first.kind == Tok::Minus) {
      next();
      negative = true;
    }
    const Token& t = peek();
    if (t.kind != Tok::Number) {
      if (t.kind == Tok::End || t.kind == Tok::Comma || t.kind == Tok::RParen) {
        fail("expected integer exponent");
      }
      throw NonIntegerExponent(t.line, t.column);
    }
    const bool integral = std::all_of(t.text.begin(), t.text.end(),
                                      [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!integral) throw NonIntegerExponent(t.line, t.column);
    int value = 0;
    auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (res.ec != std::errc{} || value > 1024) fail("exponent out of range");
    next();
    return negative ? -value : value;
  }

  Expr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        double v = 0.0;
        auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (res.ec != std::errc{} || res.ptr != t.text.data() + t.text.size() || !std::isfinite(v)) {
          fail("malformed number");
        }
        next();
        return Expr::constant(v);
      }
      case Tok::Var: {
        int idx = 0;
        auto res = std::from_chars(t.text.data() + 1, t.text.data() + t.text.size(), idx);
        if (res.ec != std::errc{}) idx = INT_MAX;
        if (idx < 1 || idx > n_) throw UndefinedVariable(idx, n_);
        next();
        return Expr::variable(idx);
      }
      case Tok::Ident: {
        ExprKind kind;
        if (t.text == "sin") kind = ExprKind::Sin;
        else if (t.text == "cos") kind = ExprKind::Cos;
        else if (t.text == "exp") kind = ExprKind::Exp;
        else if (t.text == "sqrt") kind = ExprKind::Sqrt;
        else if (t.text == "abs") kind = ExprKind::Abs;
        else fail("unknown function or identifier");
        next();
        expect(Tok::LParen, "'('");
        Expr arg = parse_expr();
        expect(Tok::RParen, "')'");
        return Expr::unary(kind, std::move(arg));
      }
      case Tok::LParen: {
        next();
        Expr inner = parse_expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        fail("expected a number, variable, function or '('");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int n_;
  int nesting_ = 0;
};

}  // namespace

MapSpec parse_map(std::string_view text, int n) {
  if (n < 1) throw InvalidInput("map dimension n must be >= 1");
  Parser parser(Lexer(text).run(), n);
  MapSpec spec;
  spec.n = n;
  spec.components = parser.parse_map();
  spec.m = static_cast<int>(spec.components.size());
  spec.source_text = std::string(text);
  spec.digest = map_digest(text);
  return spec;
}

MapSpec parse_self_map(std::string_view text) {
  const MapSpec probe = parse_map(text, INT_MAX);
  return parse_map(text, probe.m);
}

Vec MapSpec::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n) {
    throw InvalidInput("point has dimension " + std::to_string(x.size()) + ", map expects " +
                       std::to_string(n));
  }
  Vec out;
  out.reserve(components.size());
  for (const Expr& e : components) out.push_back(e.evaluate(x));
  return out;
}

VectorField MapSpec::field() const {
  auto self = std::make_shared<const MapSpec>(*this);
  return VectorField{n, m, [self](std::span<const double> x) { return self->evaluate(x); }};
}

std::string MapSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ", ";
    out += components[i].to_string();
  }
  return out;
}

std::string map_digest(std::string_view text) {
  std::string normalized;
  normalized.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) normalized.push_back(c);
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(normalized.data(), normalized.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw InvalidInput("digest computation failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

double lipschitz_estimate(const VectorField& field, const Region& region, int samples) {
  if (samples < 100) throw InvalidInput("lipschitz_estimate needs at least 100 samples");
  const int n = region.dim();
  if (field.n != n) throw InvalidInput("lipschitz_estimate: dimension mismatch");

  std::mt19937_64 rng(0x51f15eedULL);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double step = 1e-6 * region.diameter();

  auto draw = [&](int k) {
    Vec x(n);
    if (region.is_disk()) {
      if (k == 0) return region.center();
      Vec dir(n);
      for (double& v : dir) v = gauss(rng);
      const double len = norm(dir);
      const double radius = region.radius() * std::pow(unif(rng), 1.0 / n);
      for (int i = 0; i < n; ++i) x[i] = region.center()[i] + radius * dir[i] / len;
    } else {
      for (int i = 0; i < n; ++i) {
        x[i] = region.lower()[i] + unif(rng) * (region.upper()[i] - region.lower()[i]);
      }
    }
    return x;
  };

  double best = 0.0;
  Eigen::MatrixXd jac(field.m, n);
  for (int k = 0; k < samples; ++k) {
    const Vec x = draw(k);
    for (int j = 0; j < n; ++j) {
      Vec xp = x;
      Vec xm = x;
      xp[j] += step;
      xm[j] -= step;
      const Vec fp = field(xp);
      const Vec fm = field(xm);
      for (int i = 0; i < field.m; ++i) jac(i, j) = (fp[i] - fm[i]) / (2.0 * step);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
    best = std::max(best, svd.singularValues()(0));
  }
  return 2.0 * best;
}

double lipschitz_estimate(const MapSpec& spec, const Region& region, int samples) {
  return lipschitz_estimate(spec.field(), region, samples);
}

const std::vector<BuiltinMap>& builtin_maps() {
  static const std::vector<BuiltinMap> maps = {
      {"opposite-id", "x1, x2", 2, "F(x) = x; never points opposite to x"},
      {"shifted", "x1 + 3, x2 + 3", 2, "F(x) = x + (3,3); zero winding on the unit circle"},
      {"z2", "x1^2 - x2^2, 2*x1*x2", 2, "F(z) = z^2; winding 2"},
      {"coercive-shift", "x1 - 2, x2", 2, "F(x) = x - b with b = (2,0); coercive"},
      {"rotation-half", "(x1 + 0.2)/2, (x2 - 0.1)/2", 2,
       "f(x) = (x + a)/2 with a = (0.2,-0.1); self-map of the unit disk"},
  };
  return maps;
}

const BuiltinMap* find_builtin(std::string_view name) {
  for (const BuiltinMap& b : builtin_maps()) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

}  // namespace zerocert
