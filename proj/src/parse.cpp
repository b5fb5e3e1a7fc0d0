#include "qroots/parse.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "qroots/errors.hpp"

namespace qroots {

namespace {

enum class Tok { Number, Unit, Z, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  double number = 0.0;  // Number
  char unit = 0;        // Unit: 'i', 'j' or 'k'
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t p = 0;
  while (p < s.size()) {
    const char c = s[p];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++p;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t q = p;
      while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
      if (q < s.size() && s[q] == '.') {
        ++q;
        while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
      }
      // Exponent only when digits follow, so "2e" is not swallowed.
      if (q < s.size() && (s[q] == 'e' || s[q] == 'E')) {
        std::size_t r = q + 1;
        if (r < s.size() && (s[r] == '+' || s[r] == '-')) ++r;
        if (r < s.size() && std::isdigit(static_cast<unsigned char>(s[r]))) {
          while (r < s.size() && std::isdigit(static_cast<unsigned char>(s[r]))) ++r;
          q = r;
        }
      }
      if (q < s.size() && s[q] == '.') q = s.find_first_not_of("0123456789.", q);
      if (q == std::string_view::npos) q = s.size();
      double value = 0.0;
      auto [end, ec] = std::from_chars(s.data() + p, s.data() + q, value);
      if (ec != std::errc{} || end != s.data() + q) {
        throw SyntaxError("malformed number '" + std::string(s.substr(p, q - p)) + "'", p);
      }
      out.push_back({Tok::Number, p, value});
      p = q;
      continue;
    }
    Token t{Tok::End, p};
    switch (c) {
      case 'i': case 'j': case 'k': t.kind = Tok::Unit; t.unit = c; break;
      case 'z': t.kind = Tok::Z; break;
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '^': t.kind = Tok::Caret; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", p);
    }
    out.push_back(t);
    ++p;
  }
  out.push_back({Tok::End, s.size()});
  return out;
}

Quaternion unit_value(char u) {
  switch (u) {
    case 'i': return Quaternion::unit_i();
    case 'j': return Quaternion::unit_j();
    default: return Quaternion::unit_k();
  }
}

// Values of the standard ring H[z].
struct StdAlgebra {
  using Value = StdPoly;
  static Value constant(const Quaternion& q) { return StdPoly{q}; }
  static Value variable() { return StdPoly::monomial(Quaternion{1.0}, 1); }
  static Value add(const Value& a, const Value& b, std::size_t) { return a + b; }
  static Value neg(const Value& a) { return Quaternion{-1.0} * a; }
  static Value mul(const Value& a, const Value& b, std::size_t) { return a * b; }
  static std::optional<Quaternion> as_constant(const Value& a) {
    if (a.degree() <= 0) return a[0];
    return std::nullopt;
  }
};

// Two-sided term lists.
struct TwoSidedAlgebra {
  using Value = std::vector<TwoSidedTerm>;

  static TwoSidedTerm normalized(TwoSidedTerm t) {
    if (t.power == 0) {
      t.left = t.left * t.right;
      t.right = Quaternion{1.0};
    }
    return t;
  }
  // Collapses all z-free terms into one, kept where the first one stood.
  static Value merge_constants(const Value& terms) {
    Value out;
    std::optional<std::size_t> slot;
    for (const auto& t : terms) {
      if (t.power != 0) {
        out.push_back(t);
      } else if (slot) {
        out[*slot].left += t.left;
      } else {
        slot = out.size();
        out.push_back(t);
      }
    }
    return out;
  }
  static Value constant(const Quaternion& q) { return {{q, 0, Quaternion{1.0}}}; }
  static Value variable() { return {{Quaternion{1.0}, 1, Quaternion{1.0}}}; }
  static Value add(const Value& a, const Value& b, std::size_t) {
    Value out = a;
    out.insert(out.end(), b.begin(), b.end());
    return merge_constants(out);
  }
  static Value neg(const Value& a) {
    Value out = a;
    for (auto& t : out) t.left = -t.left;
    return out;
  }
  static Value mul(const Value& a, const Value& b, std::size_t pos) {
    Value out;
    for (const auto& x : a) {
      for (const auto& y : b) {
        if (x.power == 0) {
          out.push_back(normalized({x.left * x.right * y.left, y.power, y.right}));
        } else if (y.power == 0) {
          out.push_back(normalized({x.left, x.power, x.right * y.left * y.right}));
        } else {
          const Quaternion middle = x.right * y.left;
          if (!is_pure_real(middle, 0.0)) {
            throw SyntaxError("two-sided term would need two separate z blocks", pos);
          }
          out.push_back(normalized({x.left * middle, x.power + y.power, y.right}));
        }
      }
    }
    return merge_constants(out);
  }
  static std::optional<Quaternion> as_constant(const Value& a) {
    Quaternion acc;
    for (const auto& t : a) {
      if (t.power != 0) return std::nullopt;
      acc += t.left * t.right;
    }
    return acc;
  }
};

template <class Algebra>
class Parser {
public:
  using Value = typename Algebra::Value;

  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Value parse() {
    if (peek().kind == Tok::End) throw SyntaxError("empty expression", 0);
    Value v = expr();
    if (peek().kind != Tok::End) {
      throw SyntaxError("expected '+', '-', '*' or end of input", peek().pos);
    }
    return v;
  }

private:
  const Token& peek() const { return tokens_[idx_]; }
  const Token& next() { return tokens_[idx_++]; }

  bool starts_factor(Tok k) const {
    return k == Tok::Number || k == Tok::Unit || k == Tok::Z || k == Tok::LParen;
  }

  Value expr() {
    Value v = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token op = next();
      Value rhs = term();
      v = Algebra::add(v, op.kind == Tok::Plus ? rhs : Algebra::neg(rhs), op.pos);
    }
    return v;
  }

  Value term() {
    Value v = signed_power();
    for (;;) {
      const std::size_t pos = peek().pos;
      if (peek().kind == Tok::Star) {
        next();
        v = Algebra::mul(v, power(), pos);
      } else if (starts_factor(peek().kind)) {
        v = Algebra::mul(v, power(), pos);
      } else {
        return v;
      }
    }
  }

  Value signed_power() {
    if (peek().kind == Tok::Minus) {
      next();
      return Algebra::neg(signed_power());
    }
    if (peek().kind == Tok::Plus) {
      next();
      return signed_power();
    }
    return power();
  }

  Value power() {
    Value base = primary();
    if (peek().kind != Tok::Caret) return base;
    const std::size_t caret = next().pos;
    const Token& e = next();
    if (e.kind != Tok::Number || e.number != static_cast<double>(static_cast<int>(e.number)) ||
        e.number < 0 || e.number > 64) {
      throw SyntaxError("expected an integer exponent between 0 and 64", e.pos);
    }
    Value acc = Algebra::constant(Quaternion{1.0});
    for (int s = 0; s < static_cast<int>(e.number); ++s) acc = Algebra::mul(acc, base, caret);
    return acc;
  }

  Value primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number:
        return Algebra::constant(Quaternion{t.number});
      case Tok::Unit:
        return Algebra::constant(unit_value(t.unit));
      case Tok::Z:
        return Algebra::variable();
      case Tok::LParen: {
        Value v = expr();
        if (peek().kind != Tok::RParen) throw SyntaxError("expected ')'", peek().pos);
        next();
        return v;
      }
      case Tok::End:
        throw SyntaxError("unexpected end of input, expected a number, i, j, k, z or '('", t.pos);
      default:
        throw SyntaxError("expected a number, i, j, k, z or '('", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t idx_ = 0;
};

std::string coeff_text(const Quaternion& q) { return "(" + to_string(q) + ")"; }

std::string power_text(int power) {
  if (power == 0) return "";
  if (power == 1) return "z";
  return "z^" + std::to_string(power);
}

} // namespace

StdPoly parse_std_poly(std::string_view text) { return Parser<StdAlgebra>(text).parse(); }

TwoSidedPoly parse_two_sided(std::string_view text) {
  return TwoSidedPoly(Parser<TwoSidedAlgebra>(text).parse());
}

Quaternion parse_quaternion(std::string_view text) {
  const auto terms = Parser<TwoSidedAlgebra>(text).parse();
  const auto q = TwoSidedAlgebra::as_constant(terms);
  if (!q) throw SyntaxError("expected a quaternion constant without z", 0);
  return *q;
}

std::string format_std_poly(const StdPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int m = f.degree(); m >= 0; --m) {
    if (f[m] == Quaternion{}) continue;
    if (!out.empty()) out += " + ";
    out += coeff_text(f[m]);
    if (m > 0) out += " " + power_text(m);
  }
  return out;
}

std::string format_two_sided(const TwoSidedPoly& f) {
  if (f.terms().empty()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    out += coeff_text(t.left);
    if (t.power > 0) out += " " + power_text(t.power) + " " + coeff_text(t.right);
    else if (t.right != Quaternion{1.0}) out += " " + coeff_text(t.right);
  }
  return out;
}

} // namespace qroots
