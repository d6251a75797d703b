#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "segmon/errors.hpp"

namespace segmon {

/// Arbitrary-precision integer scalar.
using Integer = mpz_class;

/// Exact rational scalar, always kept in lowest terms with a positive
/// denominator.  Equality is structural equality of that canonical form.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int value) : value_(value) {}             // NOLINT: implicit
  Rational(long value) : value_(value) {}            // NOLINT
  Rational(const Integer& value) : value_(value) {}  // NOLINT

  Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
      throw ValidationError("rational denominator must be nonzero");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }

  /// Accepts "p" or "p/q" with optional leading '-', q > 0, no inner spaces.
  static Rational parse(std::string_view text) {
    std::size_t i = 0;
    const auto digits = [&](std::string& out) {
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        out.push_back(text[i++]);
      }
      if (out.empty()) {
        throw ValidationError("malformed rational '" + std::string(text) +
                              "': expected digits");
      }
    };
    std::string num;
    if (i < text.size() && text[i] == '-') {
      num.push_back(text[i++]);
    }
    digits(num);
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
      ++i;
      den.clear();
      digits(den);
    }
    if (i != text.size()) {
      throw ValidationError("malformed rational '" + std::string(text) +
                            "': trailing characters");
    }
    return Rational(Integer(num), Integer(den));
  }

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Largest integer <= *this.
  Integer floor() const {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(),
               value_.get_den_mpz_t());
    return out;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// Canonical text: "p" or "p/q" in lowest terms, q > 0, no spaces.
  std::string str() const {
    std::string out = value_.get_num().get_str();
    if (value_.get_den() != 1) {
      out += '/';
      out += value_.get_den().get_str();
    }
    return out;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ + b.value_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ - b.value_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ * b.value_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) {
      throw DomainError("rational division by zero");
    }
    return Rational(mpq_class(a.value_ / b.value_));
  }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

}  // namespace segmon
