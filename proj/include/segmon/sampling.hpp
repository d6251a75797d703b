#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "segmon/element.hpp"
#include "segmon/errors.hpp"
#include "segmon/rational.hpp"

namespace segmon {

/// Deterministic source of random elements over one ambient size.
/// Coordinates are built from bounded random numerators and denominators;
/// candidates that violate the element bounds are rejected and redrawn,
/// never repaired.  A fixed seed reproduces the exact sample sequence.
class ElementSampler {
 public:
  ElementSampler(int ambient, std::uint64_t seed,
                 unsigned max_denominator = 8)
      : ambient_(ambient), max_den_(max_denominator), rng_(seed) {
    if (ambient < 2) {
      throw ValidationError("ambient size must be >= 2, got " +
                            std::to_string(ambient));
    }
    if (max_denominator == 0) {
      throw ValidationError("max denominator must be >= 1");
    }
  }

  int ambient() const { return ambient_; }

  /// Uniform in [0, bound); bound >= 1.  Multiply-shift keeps the mapping
  /// from engine output stable across platforms.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng_()) * bound) >> 64);
  }

  /// Uniform integer in [lo, hi]; the width must fit in 64 bits.
  Integer integer_between(const Integer& lo, const Integer& hi) {
    const Integer width = hi - lo + 1;
    if (width <= 0 || !width.fits_ulong_p()) {
      throw DomainError("integer_between range unusable: [" + lo.get_str() +
                        ", " + hi.get_str() + "]");
    }
    return lo + Integer(static_cast<unsigned long>(below(width.get_ui())));
  }

  /// A rational in [lo, hi] with bounded denominator where possible; falls
  /// back to the product of the endpoint denominators, which always admits
  /// a representative.
  Rational rational_between(const Rational& lo, const Rational& hi) {
    if (hi < lo) {
      throw DomainError("rational_between needs lo <= hi");
    }
    for (int attempt = 0; attempt < 16; ++attempt) {
      const Integer den(static_cast<unsigned long>(below(max_den_) + 1));
      Integer num_lo, num_hi;
      mpz_cdiv_q(num_lo.get_mpz_t(), Integer(lo.numerator() * den).get_mpz_t(),
                 lo.denominator().get_mpz_t());
      mpz_fdiv_q(num_hi.get_mpz_t(), Integer(hi.numerator() * den).get_mpz_t(),
                 hi.denominator().get_mpz_t());
      if (num_lo <= num_hi) {
        return Rational(integer_between(num_lo, num_hi), den);
      }
    }
    const Integer den = lo.denominator() * hi.denominator();
    const Integer num_lo = lo.numerator() * hi.denominator();
    const Integer num_hi = hi.numerator() * lo.denominator();
    return Rational(integer_between(num_lo, num_hi), den);
  }

  /// Any element; the zero element roughly one time in 32.
  Element element() {
    if (below(32) == 0) return Element::zero(ambient_);
    return nonzero();
  }

  Element nonzero() {
    while (true) {
      const Rational lo = coordinate(1, ambient_);
      const Rational shift = coordinate(-(ambient_ - 1), ambient_ - 1);
      const Rational hi = coordinate(1, ambient_);
      if (auto candidate = Element::try_make(ambient_, lo, shift, hi)) {
        return *candidate;
      }
    }
  }

  Element nonzero_idempotent() {
    const Rational lo = rational_between(Rational(1), Rational(ambient_));
    const Rational hi = rational_between(lo, Rational(ambient_));
    return Element::make(ambient_, lo, Rational(0), hi);
  }

  Element nilpotent() {
    while (true) {
      Element x = nonzero();
      if (x.shift() != Rational(0)) return x;
    }
  }

  /// A pair (x, y) with x.leq(y), both nonzero: y is drawn freely, x is a
  /// subsegment of y on the same diagonal.
  std::pair<Element, Element> comparable_pair() {
    return comparable_pair_below(nonzero());
  }

  /// As comparable_pair(), with the upper element given.
  std::pair<Element, Element> comparable_pair_below(Element upper) {
    const Rational lo = rational_between(upper.lo(), upper.hi());
    const Rational hi = rational_between(lo, upper.hi());
    Element lower = Element::make(upper.ambient(), lo, upper.shift(), hi);
    return {std::move(lower), std::move(upper)};
  }

 private:
  /// A rational in [lo_int, hi_int] with denominator in [1, max_den_].
  Rational coordinate(long lo_int, long hi_int) {
    const Integer den(static_cast<unsigned long>(below(max_den_) + 1));
    const Integer num =
        integer_between(Integer(lo_int) * den, Integer(hi_int) * den);
    return Rational(num, den);
  }

  int ambient_;
  unsigned max_den_;
  std::mt19937_64 rng_;
};

}  // namespace segmon
