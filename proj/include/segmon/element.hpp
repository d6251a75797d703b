#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "segmon/errors.hpp"
#include "segmon/rational.hpp"

namespace segmon {

/// An element of the segment monoid over ambient size n >= 2: either the
/// zero element, or the partial shift of [1, n] sending t to t + shift()
/// for t in [lo(), hi()].  Nonzero elements satisfy
///
///     1 - min(0, shift) <= lo <= hi <= n - max(0, shift),
///
/// which keeps both the segment [lo, hi] and its image inside [1, n].
/// These bounds further force |shift| <= n-1 and 1 <= lo <= hi <= n.
///
/// Values are immutable; every operation is a pure function, so elements
/// may be shared freely across threads.
///
/// Canonical text form: "0", or "(lo,shift,hi)" with each coordinate an
/// integer or "p/q" in lowest terms and no spaces.
class Element {
 public:
  /// The absorbing zero element (the empty partial map).
  static Element zero(int ambient) {
    check_ambient(ambient);
    return Element(ambient);
  }

  /// The monoid identity: the full segment [1, n] with shift 0.
  static Element identity(int ambient) {
    check_ambient(ambient);
    return Element(ambient, Rational(1), Rational(0), Rational(ambient));
  }

  /// Validates the coordinate bounds and never adjusts them; each violated
  /// inequality is reported by name.
  static Element make(int ambient, Rational lo, Rational shift, Rational hi) {
    check_ambient(ambient);
    const Rational least = lower_bound(shift);
    const Rational greatest = upper_bound(ambient, shift);
    if (lo < least) {
      throw ValidationError("element bound violated: lo = " + lo.str() +
                            " < 1 - min(0, shift) = " + least.str());
    }
    if (hi < lo) {
      throw ValidationError("element bound violated: hi = " + hi.str() +
                            " < lo = " + lo.str());
    }
    if (greatest < hi) {
      throw ValidationError("element bound violated: hi = " + hi.str() +
                            " > n - max(0, shift) = " + greatest.str());
    }
    return Element(ambient, std::move(lo), std::move(shift), std::move(hi));
  }

  /// Non-throwing variant of make(); std::nullopt on any bound violation.
  static std::optional<Element> try_make(int ambient, Rational lo,
                                         Rational shift, Rational hi) {
    if (ambient < 2) return std::nullopt;
    if (lo < lower_bound(shift) || hi < lo ||
        upper_bound(ambient, shift) < hi) {
      return std::nullopt;
    }
    return Element(ambient, std::move(lo), std::move(shift), std::move(hi));
  }

  static Element parse(std::string_view text, int ambient);

  int ambient() const { return ambient_; }
  bool is_zero() const { return zero_; }

  const Rational& lo() const {
    require_nonzero();
    return lo_;
  }
  const Rational& shift() const {
    require_nonzero();
    return shift_;
  }
  const Rational& hi() const {
    require_nonzero();
    return hi_;
  }

  bool is_idempotent() const { return zero_ || shift_ == Rational(0); }
  bool is_point() const { return !zero_ && lo_ == hi_; }
  bool is_identity() const {
    return !zero_ && lo_ == Rational(1) && shift_ == Rational(0) &&
           hi_ == Rational(ambient_);
  }

  /// -1 for the zero element, hi - lo otherwise.
  Rational height() const { return zero_ ? Rational(-1) : hi_ - lo_; }

  /// The unique semigroup inverse; mirrors the segment across the main
  /// diagonal.
  Element inverse() const {
    if (zero_) return *this;
    return checked(ambient_, lo_ + shift_, -shift_, hi_ + shift_);
  }

  /// x * x.inverse(): the idempotent on the segment [lo, hi].
  Element range() const {
    if (zero_) return *this;
    return checked(ambient_, lo_, Rational(0), hi_);
  }

  /// x.inverse() * x: the idempotent on the image segment.
  Element domain() const {
    if (zero_) return *this;
    return checked(ambient_, lo_ + shift_, Rational(0), hi_ + shift_);
  }

  /// j-fold product of *this with itself, in closed form; requires j >= 1.
  Element pow(const Integer& exponent) const {
    if (exponent < 1) {
      throw DomainError("pow requires a positive exponent, got " +
                        exponent.get_str());
    }
    if (zero_) return *this;
    const Rational steps{Integer(exponent - 1)};
    Rational lo_j = lo_ - steps * std::min(Rational(0), shift_);
    Rational hi_j = hi_ - steps * std::max(Rational(0), shift_);
    if (hi_j < lo_j) return Element(ambient_);
    return checked(ambient_, std::move(lo_j), Rational(exponent) * shift_,
                   std::move(hi_j));
  }

  /// Natural partial order of the inverse semigroup: x <= y iff
  /// x == x * x.inverse() * y.  On nonzero elements this is "same shift,
  /// segment contained"; the zero element is below everything.
  bool leq(const Element& other) const {
    require_same_ambient(other);
    if (zero_) return true;
    if (other.zero_) return false;
    return shift_ == other.shift_ && lo_ >= other.lo_ && hi_ <= other.hi_;
  }

  std::string str() const {
    if (zero_) return "0";
    return "(" + lo_.str() + "," + shift_.str() + "," + hi_.str() + ")";
  }

  friend Element operator*(const Element& x, const Element& y) {
    x.require_same_ambient(y);
    if (x.zero_ || y.zero_) return Element(x.ambient_);
    Rational lo2 = std::max(x.lo_, y.lo_ - x.shift_);
    Rational hi2 = std::min(x.hi_, y.hi_ - x.shift_);
    if (hi2 < lo2) return Element(x.ambient_);
    return checked(x.ambient_, std::move(lo2), x.shift_ + y.shift_,
                   std::move(hi2));
  }

  friend bool operator==(const Element& x, const Element& y) {
    x.require_same_ambient(y);
    if (x.zero_ || y.zero_) return x.zero_ && y.zero_;
    return x.lo_ == y.lo_ && x.shift_ == y.shift_ && x.hi_ == y.hi_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Element& x) {
    return os << x.str();
  }

  void require_same_ambient(const Element& other) const {
    if (ambient_ != other.ambient_) {
      throw DomainError("ambient size mismatch: n=" +
                        std::to_string(ambient_) + " vs n=" +
                        std::to_string(other.ambient_));
    }
  }

 private:
  explicit Element(int ambient)
      : ambient_(ambient), zero_(true), lo_(0), shift_(0), hi_(0) {}

  Element(int ambient, Rational lo, Rational shift, Rational hi)
      : ambient_(ambient),
        zero_(false),
        lo_(std::move(lo)),
        shift_(std::move(shift)),
        hi_(std::move(hi)) {}

  static Rational lower_bound(const Rational& shift) {
    return Rational(1) - std::min(Rational(0), shift);
  }
  static Rational upper_bound(int ambient, const Rational& shift) {
    return Rational(ambient) - std::max(Rational(0), shift);
  }

  static void check_ambient(int ambient) {
    if (ambient < 2) {
      throw ValidationError("ambient size must be >= 2, got " +
                            std::to_string(ambient));
    }
  }

  // Internal constructor for operation results; the bounds hold by the
  // algebra, so a violation here is a library bug, not user error.
  static Element checked(int ambient, Rational lo, Rational shift,
                         Rational hi) {
    if (lo < lower_bound(shift) || hi < lo ||
        upper_bound(ambient, shift) < hi) {
      throw std::logic_error("internal element bounds violated: (" +
                             lo.str() + "," + shift.str() + "," + hi.str() +
                             ") with n=" + std::to_string(ambient));
    }
    return Element(ambient, std::move(lo), std::move(shift), std::move(hi));
  }

  void require_nonzero() const {
    if (zero_) {
      throw DomainError("the zero element has no coordinates");
    }
  }

  int ambient_;
  bool zero_;
  Rational lo_, shift_, hi_;
};

/// Groupoid (restricted) product: defined iff x.domain() == y.range(),
/// i.e. y is the shift of x by x.shift(); equals x * y when defined.
/// std::nullopt signals "undefined", not an error.
inline std::optional<Element> restricted_product(const Element& x,
                                                 const Element& y) {
  x.require_same_ambient(y);
  if (x.is_zero() && y.is_zero()) return x;
  if (x.is_zero() || y.is_zero()) return std::nullopt;
  if (y.lo() == x.lo() + x.shift() && y.hi() == x.hi() + x.shift()) {
    return x * y;
  }
  return std::nullopt;
}

namespace detail {

/// Shared scanning state for the element and expression parsers.
struct TextCursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool at_end() const { return pos >= text.size(); }

  char peek() const { return text[pos]; }

  bool consume(char c) {
    if (!at_end() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* token) {
    skip_ws();
    if (!consume(c)) {
      throw ParseError(std::string("expected '") + token + "'", pos, {token});
    }
  }
};

inline Integer parse_integer_token(TextCursor& cursor, bool allow_sign) {
  cursor.skip_ws();
  const std::size_t start = cursor.pos;
  std::string digits;
  if (allow_sign && !cursor.at_end() && cursor.peek() == '-') {
    digits.push_back('-');
    ++cursor.pos;
  }
  while (!cursor.at_end() && cursor.peek() >= '0' && cursor.peek() <= '9') {
    digits.push_back(cursor.peek());
    ++cursor.pos;
  }
  if (digits.empty() || digits == "-") {
    cursor.pos = start;
    throw ParseError("expected integer", cursor.pos, {"integer"});
  }
  return Integer(digits);
}

/// rat := integer | integer '/' positive-integer
inline Rational parse_rational_token(TextCursor& cursor) {
  const Integer numerator = parse_integer_token(cursor, true);
  cursor.skip_ws();
  if (!cursor.at_end() && cursor.peek() == '/') {
    ++cursor.pos;
    cursor.skip_ws();
    const std::size_t den_pos = cursor.pos;
    const Integer denominator = parse_integer_token(cursor, false);
    if (denominator == 0) {
      throw ParseError("denominator must be positive", den_pos,
                       {"positive integer"});
    }
    return Rational(numerator, denominator);
  }
  return Rational(numerator);
}

/// '0' or '(' rat ',' rat ',' rat ')'; bound violations surface as
/// ParseError anchored at the literal.
inline Element parse_element_body(TextCursor& cursor, int ambient) {
  cursor.skip_ws();
  const std::size_t start = cursor.pos;
  if (cursor.consume('0')) return Element::zero(ambient);
  if (!cursor.consume('(')) {
    throw ParseError("expected element", cursor.pos, {"0", "("});
  }
  const Rational lo = parse_rational_token(cursor);
  cursor.expect(',', ",");
  const Rational shift = parse_rational_token(cursor);
  cursor.expect(',', ",");
  const Rational hi = parse_rational_token(cursor);
  cursor.expect(')', ")");
  try {
    return Element::make(ambient, lo, shift, hi);
  } catch (const ValidationError& error) {
    throw ParseError(std::string("invalid element literal: ") + error.what(),
                     start);
  }
}

}  // namespace detail

inline Element Element::parse(std::string_view text, int ambient) {
  detail::TextCursor cursor{text};
  Element out = detail::parse_element_body(cursor, ambient);
  cursor.skip_ws();
  if (!cursor.at_end()) {
    throw ParseError("trailing characters after element", cursor.pos,
                     {"end of input"});
  }
  return out;
}

}  // namespace segmon
