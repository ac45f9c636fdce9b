#pragma once

// Subtraction-free rational expressions and their min-plus tropicalization.
//
// Grammar (whitespace ignored, '-' rejected everywhere):
//   expr    := term ('+' term)*
//   term    := power (('*' | '/') power)*
//   power   := primary ('^' integer)?
//   primary := integer | identifier | '(' expr ')'
// Negative exponents are written with '/', e.g. 1/x^2.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lusztig/error.hpp"
#include "lusztig/int_matrix.hpp"

namespace lusztig {

using Rational = boost::multiprecision::cpp_rational;

/// Positive-coefficient Laurent polynomial: exponent vector -> coefficient.
class PositiveLaurentPoly {
 public:
  using Terms = std::map<IntVec, Rational>;

  PositiveLaurentPoly(std::size_t num_vars, Terms terms) : num_vars_(num_vars), terms_(std::move(terms)) {
    if (terms_.empty()) throw Error("PositiveLaurentPoly needs at least one term");
    for (const auto& [exps, coef] : terms_) {
      if (exps.size() != num_vars_) throw Error("PositiveLaurentPoly: exponent vector of wrong length");
      if (coef <= 0) throw Error("PositiveLaurentPoly: coefficients must be positive");
    }
  }

  static PositiveLaurentPoly constant(std::size_t num_vars, const Rational& c) {
    return PositiveLaurentPoly(num_vars, {{IntVec(num_vars, 0), c}});
  }
  static PositiveLaurentPoly monomial(const IntVec& exps, const Rational& c = 1) {
    return PositiveLaurentPoly(exps.size(), {{exps, c}});
  }

  [[nodiscard]] std::size_t num_vars() const noexcept { return num_vars_; }
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_monomial() const noexcept { return terms_.size() == 1; }
  [[nodiscard]] bool is_one() const {
    return is_monomial() && terms_.begin()->second == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(), [](Int e) { return e == 0; });
  }
  [[nodiscard]] std::set<IntVec> support() const {
    std::set<IntVec> s;
    for (const auto& t : terms_) s.insert(t.first);
    return s;
  }

  friend PositiveLaurentPoly operator+(const PositiveLaurentPoly& a, const PositiveLaurentPoly& b) {
    a.check_vars(b);
    Terms t = a.terms_;
    for (const auto& [e, c] : b.terms_) t[e] += c;
    return PositiveLaurentPoly(a.num_vars_, std::move(t));
  }

  friend PositiveLaurentPoly operator*(const PositiveLaurentPoly& a, const PositiveLaurentPoly& b) {
    a.check_vars(b);
    Terms t;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        IntVec e(a.num_vars_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        t[e] += ca * cb;
      }
    return PositiveLaurentPoly(a.num_vars_, std::move(t));
  }

  /// Non-negative integer power.
  [[nodiscard]] PositiveLaurentPoly pow(Int k) const {
    if (k < 0) throw Error("PositiveLaurentPoly::pow needs a non-negative exponent");
    PositiveLaurentPoly result = constant(num_vars_, 1);
    PositiveLaurentPoly base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  /// Inverse of a monomial (Laurent).
  [[nodiscard]] PositiveLaurentPoly monomial_inverse() const {
    if (!is_monomial()) throw Error("monomial_inverse on a polynomial with several terms");
    const auto& [e, c] = *terms_.begin();
    IntVec neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    return monomial(neg, 1 / c);
  }

  friend bool operator==(const PositiveLaurentPoly&, const PositiveLaurentPoly&) = default;

 private:
  void check_vars(const PositiveLaurentPoly& o) const {
    if (o.num_vars_ != num_vars_) throw Error("PositiveLaurentPoly: variable count mismatch");
  }

  std::size_t num_vars_;
  Terms terms_;
};

/// num / den with positive-coefficient numerator and denominator. After
/// normalization a single-monomial denominator is folded into the numerator,
/// so the denominator is either 1 or has at least two terms.
class SubtractionFreeExpr {
 public:
  SubtractionFreeExpr(std::vector<std::string> variables, PositiveLaurentPoly num, PositiveLaurentPoly den)
      : variables_(std::move(variables)), num_(std::move(num)), den_(std::move(den)) {
    if (num_.num_vars() != variables_.size() || den_.num_vars() != variables_.size())
      throw Error("SubtractionFreeExpr: variable count mismatch");
    normalize();
  }

  static SubtractionFreeExpr constant(std::vector<std::string> vars, const Rational& c) {
    const auto n = vars.size();
    return {std::move(vars), PositiveLaurentPoly::constant(n, c), PositiveLaurentPoly::constant(n, 1)};
  }
  static SubtractionFreeExpr monomial(std::vector<std::string> vars, const IntVec& exps, const Rational& c = 1) {
    const auto n = vars.size();
    return {std::move(vars), PositiveLaurentPoly::monomial(exps, c), PositiveLaurentPoly::constant(n, 1)};
  }
  static SubtractionFreeExpr variable(std::vector<std::string> vars, std::size_t index) {
    IntVec e(vars.size(), 0);
    e.at(index) = 1;
    return monomial(std::move(vars), e);
  }

  [[nodiscard]] const std::vector<std::string>& variables() const noexcept { return variables_; }
  [[nodiscard]] const PositiveLaurentPoly& num() const noexcept { return num_; }
  [[nodiscard]] const PositiveLaurentPoly& den() const noexcept { return den_; }
  [[nodiscard]] bool is_monomial() const { return num_.is_monomial() && den_.is_one(); }

  friend SubtractionFreeExpr operator+(const SubtractionFreeExpr& a, const SubtractionFreeExpr& b) {
    a.check_vars(b);
    if (a.den_ == b.den_) return {a.variables_, a.num_ + b.num_, a.den_};
    return {a.variables_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend SubtractionFreeExpr operator*(const SubtractionFreeExpr& a, const SubtractionFreeExpr& b) {
    a.check_vars(b);
    return {a.variables_, a.num_ * b.num_, a.den_ * b.den_};
  }
  friend SubtractionFreeExpr operator/(const SubtractionFreeExpr& a, const SubtractionFreeExpr& b) {
    a.check_vars(b);
    return {a.variables_, a.num_ * b.den_, a.den_ * b.num_};
  }

  /// Integer power; negative exponents invert.
  [[nodiscard]] SubtractionFreeExpr pow(Int k) const {
    if (k >= 0) return {variables_, num_.pow(k), den_.pow(k)};
    return {variables_, den_.pow(-k), num_.pow(-k)};
  }

  friend bool operator==(const SubtractionFreeExpr&, const SubtractionFreeExpr&) = default;

 private:
  void normalize() {
    if (den_.is_monomial() && !den_.is_one()) {
      num_ = num_ * den_.monomial_inverse();
      den_ = PositiveLaurentPoly::constant(variables_.size(), 1);
    }
  }
  void check_vars(const SubtractionFreeExpr& o) const {
    if (o.variables_ != variables_) throw Error("SubtractionFreeExpr: operands over different variables");
  }

  std::vector<std::string> variables_;
  PositiveLaurentPoly num_;
  PositiveLaurentPoly den_;
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  SubtractionFreeExpr parse() {
    if (const auto minus = text_.find('-'); minus != std::string_view::npos)
      throw ParseError("not subtraction-free: '-' is not allowed", minus);
    SubtractionFreeExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  SubtractionFreeExpr expr() {
    SubtractionFreeExpr e = term();
    while (accept('+')) e = e + term();
    return e;
  }

  SubtractionFreeExpr term() {
    SubtractionFreeExpr e = power();
    for (;;) {
      if (accept('*'))
        e = e * power();
      else if (accept('/'))
        e = e / power();
      else
        return e;
    }
  }

  SubtractionFreeExpr power() {
    SubtractionFreeExpr base = primary();
    if (accept('^')) {
      skip_ws();
      bool paren = accept('(');
      skip_ws();
      const std::size_t at = pos_;
      const Int k = integer_literal();
      if (k > max_exponent) throw ParseError("exponent too large", at);
      if (paren) expect(')');
      return base.pow(k);
    }
    return base;
  }

  SubtractionFreeExpr primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      SubtractionFreeExpr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t at = pos_;
      Rational value(integer_token());
      if (value == 0) throw ParseError("zero literal", at);
      return SubtractionFreeExpr::constant(vars_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t at = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name += text_[pos_++];
      const auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError("unknown identifier '" + name + "'", at);
      return SubtractionFreeExpr::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    throw ParseError(std::string("unexpected '") + ch + "'", pos_);
  }

  std::string integer_token() {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
    return digits;
  }

  Int integer_literal() {
    const std::size_t at = pos_;
    const std::string digits = integer_token();
    if (digits.empty()) throw ParseError("expected integer exponent", at);
    if (digits.size() > 9) throw ParseError("exponent too large", at);
    return std::stoll(digits);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' before end", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  static constexpr Int max_exponent = 256;
  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

inline std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

inline std::string format_term(const std::vector<std::string>& vars, const IntVec& exps, const Rational& coef) {
  std::string out;
  const auto factor = [&](std::size_t i, Int e) {
    std::string f = vars[i];
    if (e != 1) f += "^" + std::to_string(e);
    return f;
  };
  bool any_positive = false;
  for (std::size_t i = 0; i < exps.size(); ++i) any_positive |= exps[i] > 0;
  if (coef != 1 || !any_positive) out = format_rational(coef);
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > 0) out += (out.empty() ? "" : "*") + factor(i, exps[i]);
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] < 0) out += "/" + factor(i, -exps[i]);
  return out;
}

inline std::string format_poly(const std::vector<std::string>& vars, const PositiveLaurentPoly& p) {
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += format_term(vars, e, c);
  }
  return out;
}

}  // namespace detail

inline SubtractionFreeExpr parse_expr(std::string_view text, const std::vector<std::string>& variables) {
  return detail::ExprParser(text, variables).parse();
}

/// Text that parse_expr maps back to an equal expression.
inline std::string to_string(const SubtractionFreeExpr& e) {
  const std::string num = detail::format_poly(e.variables(), e.num());
  if (e.den().is_one()) return num;
  return "(" + num + ")/(" + detail::format_poly(e.variables(), e.den()) + ")";
}

/// Substitute values[i] for the i-th variable of e.
inline SubtractionFreeExpr substitute(const SubtractionFreeExpr& e, const std::vector<SubtractionFreeExpr>& values) {
  if (values.size() != e.variables().size()) throw Error("substitute: wrong number of values");
  if (values.empty()) throw Error("substitute: needs at least one value");
  const auto& target_vars = values.front().variables();
  const auto eval_poly = [&](const PositiveLaurentPoly& p) {
    std::optional<SubtractionFreeExpr> sum;
    for (const auto& [exps, coef] : p.terms()) {
      SubtractionFreeExpr term = SubtractionFreeExpr::constant(target_vars, coef);
      for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] != 0) term = term * values[i].pow(exps[i]);
      sum = sum ? *sum + term : term;
    }
    return *sum;
  };
  return eval_poly(e.num()) / eval_poly(e.den());
}

/// Min-plus form: x -> min_{u in num} <u, x> - min_{v in den} <v, x>.
struct TropicalForm {
  std::set<IntVec> num_exponents;
  std::set<IntVec> den_exponents;
};

inline TropicalForm tropicalize(const SubtractionFreeExpr& e) {
  return TropicalForm{e.num().support(), e.den().support()};
}

inline Int trop_eval(const TropicalForm& form, const IntVec& point) {
  const auto min_dot = [&](const std::set<IntVec>& exps) {
    if (exps.empty()) throw Error("trop_eval: empty support");
    Int best = std::numeric_limits<Int>::max();
    for (const auto& u : exps) {
      if (u.size() != point.size())
        throw LengthMismatchError("point of dimension " + std::to_string(point.size()) + ", expected " +
                                  std::to_string(u.size()));
      Int s = 0;
      for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * point[i];
      best = std::min(best, s);
    }
    return best;
  };
  return min_dot(form.num_exponents) - min_dot(form.den_exponents);
}

/// Exponent matrix of a vector of Laurent monomials, one row per component.
inline IntMatrix monomial_exponent_matrix(const std::vector<SubtractionFreeExpr>& components) {
  if (components.empty()) return {};
  IntMatrix m(components.size(), components.front().variables().size());
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (!components[k].is_monomial()) throw Error("component " + std::to_string(k + 1) + " is not a monomial");
    const IntVec& e = components[k].num().terms().begin()->first;
    for (std::size_t j = 0; j < e.size(); ++j) m(k, j) = e[j];
  }
  return m;
}

}  // namespace lusztig
