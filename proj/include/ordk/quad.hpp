#pragma once

#include <cmath>
#include <compare>
#include <string>
#include <string_view>

#include "ordk/error.hpp"
#include "ordk/exact.hpp"

namespace ordk {

inline bool is_squarefree(const Integer& d) {
  if (d < 0) return false;
  if (d < 4) return true;
  Integer n = d;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

/// An exact element a + b*sqrt(D) of the real quadratic field Q(sqrt D).
///
/// D is a squarefree nonnegative integer. Values with b == 0 are plain
/// rationals and combine with any radicand; two values that both carry a
/// surd must agree on D. For D == 1 the surd is folded into the rational
/// part, so the sign test below never meets a perfect-square radicand.
class QuadExact {
 public:
  QuadExact() = default;
  QuadExact(int value) : rational_(value) {}  // NOLINT(implicit)
  QuadExact(Integer value) : rational_(std::move(value)) {}  // NOLINT(implicit)
  QuadExact(Rational value) : rational_(std::move(value)) {}  // NOLINT(implicit)

  QuadExact(Rational rational, Rational surd, Integer radicand)
      : rational_(std::move(rational)),
        surd_(std::move(surd)),
        radicand_(std::move(radicand)) {
    if (!is_squarefree(radicand_))
      fail(ErrorCode::Input, "radicand " + radicand_.str() + " is not squarefree");
    if (radicand_ == 0 && surd_ != 0)
      fail(ErrorCode::Input, "surd part requires a positive radicand");
    if (radicand_ == 1) {
      rational_ += surd_;
      surd_ = 0;
    }
  }

  const Rational& rational_part() const { return rational_; }
  const Rational& surd_part() const { return surd_; }
  const Integer& radicand() const { return radicand_; }
  bool is_rational() const { return surd_ == 0; }
  bool is_zero() const { return rational_ == 0 && surd_ == 0; }

  /// Sign of a + b*sqrt(D), decided by comparing a^2 with b^2*D.
  int sign() const {
    const int sa = rational_.sign();
    const int sb = surd_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const Rational lhs = rational_ * rational_;
    const Rational rhs = surd_ * surd_ * Rational(radicand_);
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
  }

  QuadExact conjugate() const { return make(rational_, -surd_, radicand_); }

  /// a^2 - b^2*D, rational and nonzero for nonzero values.
  Rational norm() const {
    return rational_ * rational_ - surd_ * surd_ * Rational(radicand_);
  }

  QuadExact operator-() const { return make(-rational_, -surd_, radicand_); }

  friend QuadExact operator+(const QuadExact& x, const QuadExact& y) {
    return make(x.rational_ + y.rational_, x.surd_ + y.surd_, common(x, y));
  }
  friend QuadExact operator-(const QuadExact& x, const QuadExact& y) {
    return make(x.rational_ - y.rational_, x.surd_ - y.surd_, common(x, y));
  }
  friend QuadExact operator*(const QuadExact& x, const QuadExact& y) {
    const Integer d = common(x, y);
    return make(x.rational_ * y.rational_ + x.surd_ * y.surd_ * Rational(d),
                x.rational_ * y.surd_ + x.surd_ * y.rational_, d);
  }
  friend QuadExact operator/(const QuadExact& x, const QuadExact& y) {
    if (y.is_zero()) fail(ErrorCode::Input, "division by zero");
    const Integer d = common(x, y);
    const Rational n = y.norm();
    const QuadExact num = x * y.conjugate();
    return make(num.rational_ / n, num.surd_ / n, d);
  }

  QuadExact& operator+=(const QuadExact& y) { return *this = *this + y; }
  QuadExact& operator-=(const QuadExact& y) { return *this = *this - y; }
  QuadExact& operator*=(const QuadExact& y) { return *this = *this * y; }
  QuadExact& operator/=(const QuadExact& y) { return *this = *this / y; }

  friend bool operator==(const QuadExact& x, const QuadExact& y) {
    if (x.rational_ != y.rational_ || x.surd_ != y.surd_) return false;
    return x.surd_ == 0 || x.radicand_ == y.radicand_;
  }

  friend std::strong_ordering operator<=>(const QuadExact& x, const QuadExact& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// "p/q" for rationals, otherwise "p/q+r/s√D" (or "p/q-r/s√D").
  std::string str() const {
    if (surd_ == 0) return to_string(rational_);
    std::string out = to_string(rational_);
    out += surd_ < 0 ? "-" : "+";
    out += to_string(surd_ < 0 ? Rational(-surd_) : surd_);
    out += "√" + radicand_.str();
    return out;
  }

  /// Floating-point rendering for display only; never used for decisions.
  double approx() const {
    return to_double(rational_) + to_double(surd_) * std::sqrt(radicand_.convert_to<double>());
  }

 private:
  static QuadExact make(Rational a, Rational b, Integer d) {
    QuadExact q;
    q.rational_ = std::move(a);
    q.surd_ = std::move(b);
    q.radicand_ = std::move(d);
    return q;
  }

  static Integer common(const QuadExact& x, const QuadExact& y) {
    if (x.surd_ != 0 && y.surd_ != 0 && x.radicand_ != y.radicand_)
      fail(ErrorCode::Input, "mixed radicands " + x.radicand_.str() + " and " +
                                 y.radicand_.str());
    if (x.radicand_ == 0) return y.radicand_;
    if (y.radicand_ == 0) return x.radicand_;
    return x.surd_ != 0 ? x.radicand_ : y.radicand_;
  }

  Rational rational_{0};
  Rational surd_{0};
  Integer radicand_{0};
};

namespace detail {

inline constexpr std::string_view kSqrtSign = "√";

inline Rational parse_surd_coefficient(std::string_view text) {
  if (text.empty() || text == "+") return 1;
  if (text == "-") return -1;
  if (text[0] == '+') text.remove_prefix(1);
  return parse_rational(text);
}

}  // namespace detail

/// Parses "p/q", "p/q+r/s√", "r/s√" or "-√" style literals. The surd may be
/// followed by digits naming the radicand, which must then equal `radicand`
/// unless `radicand` is negative, in which case the digits are required and
/// define it. "sqrt" is accepted in place of the radical sign.
inline QuadExact parse_quad(std::string_view text, Integer radicand = -1) {
  std::string s(text);
  std::string::size_type mark = s.find(detail::kSqrtSign);
  std::size_t mark_len = detail::kSqrtSign.size();
  if (mark == std::string::npos) {
    mark = s.find("sqrt");
    mark_len = 4;
  }
  if (mark == std::string::npos) {
    return QuadExact(parse_rational(s));
  }
  const std::string digits = s.substr(mark + mark_len);
  Integer d = radicand;
  if (!digits.empty()) {
    Integer declared = parse_integer(digits);
    if (radicand >= 0 && declared != radicand)
      fail(ErrorCode::Parse, "literal '" + s + "' names radicand " + declared.str() +
                                 " but the context declares " + radicand.str());
    d = declared;
  }
  if (d < 0) fail(ErrorCode::Parse, "literal '" + s + "' does not name its radicand");
  if (d == 0) fail(ErrorCode::Parse, "literal '" + s + "' has a surd but radicand 0");
  const std::string prefix = s.substr(0, mark);
  std::string::size_type split = std::string::npos;
  for (std::size_t i = prefix.size(); i-- > 1;) {
    if ((prefix[i] == '+' || prefix[i] == '-') && prefix[i - 1] != '/') {
      split = i;
      break;
    }
  }
  Rational rational = 0;
  Rational surd;
  if (split == std::string::npos) {
    surd = detail::parse_surd_coefficient(prefix);
  } else {
    rational = parse_rational(prefix.substr(0, split));
    surd = detail::parse_surd_coefficient(prefix.substr(split));
  }
  if (!is_squarefree(d)) fail(ErrorCode::Parse, "radicand " + d.str() + " is not squarefree");
  return QuadExact(rational, surd, d);
}

}  // namespace ordk
