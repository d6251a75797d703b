#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "segmon/element.hpp"
#include "segmon/errors.hpp"
#include "segmon/rational.hpp"

namespace segmon {

// ---------------------------------------------------------------------------
// Green's relations
// ---------------------------------------------------------------------------

enum class GreenRelation { R, L, H, D, J };

inline char letter(GreenRelation rel) {
  switch (rel) {
    case GreenRelation::R: return 'R';
    case GreenRelation::L: return 'L';
    case GreenRelation::H: return 'H';
    case GreenRelation::D: return 'D';
    case GreenRelation::J: return 'J';
  }
  return '?';
}

inline GreenRelation green_relation_from_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'R': return GreenRelation::R;
    case 'L': return GreenRelation::L;
    case 'H': return GreenRelation::H;
    case 'D': return GreenRelation::D;
    case 'J': return GreenRelation::J;
    default:
      throw ValidationError(std::string("unknown Green relation '") + c +
                            "': expected one of R, L, H, D, J");
  }
}

/// Closed forms of the five Green relations.  The zero element is related
/// only to itself, in every relation.
///
///   R: same segment            (lo, hi equal)
///   L: same image segment      (lo+shift, hi+shift equal)
///   H: equality
///   D, J: equal heights
inline bool green_related(GreenRelation rel, const Element& x,
                          const Element& y) {
  x.require_same_ambient(y);
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  switch (rel) {
    case GreenRelation::R:
      return x.lo() == y.lo() && x.hi() == y.hi();
    case GreenRelation::L:
      return x.lo() + x.shift() == y.lo() + y.shift() &&
             x.hi() + x.shift() == y.hi() + y.shift();
    case GreenRelation::H:
      return x == y;
    case GreenRelation::D:
    case GreenRelation::J:
      return x.height() == y.height();
  }
  return false;
}

/// For D-related nonzero x, y produces z with z.domain() == x.domain() and
/// z.range() == y.range(); std::nullopt iff the heights differ.
inline std::optional<Element> d_class_witness(const Element& x,
                                              const Element& y) {
  x.require_same_ambient(y);
  if (x.is_zero() || y.is_zero()) {
    throw DomainError("d_class_witness requires nonzero elements");
  }
  if (x.height() != y.height()) return std::nullopt;
  return Element::make(x.ambient(), y.lo(), x.lo() + x.shift() - y.lo(),
                       y.hi());
}

// ---------------------------------------------------------------------------
// Nilpotency, powers, roots
// ---------------------------------------------------------------------------

/// Least j with x^j == 0, in closed form: 2 + floor(height / |shift|).
/// std::nullopt for the zero element and for idempotents, which are the
/// only non-nilpotent elements.
inline std::optional<Integer> nilpotent_index(const Element& x) {
  if (x.is_zero() || x.is_idempotent()) return std::nullopt;
  const Rational ratio = x.height() / x.shift().abs();
  return Integer(ratio.floor() + 2);
}

/// The unique y with y^j == x, for nonzero x.  The zero element is
/// rejected: its j-th roots exist but are not unique (any nilpotent of
/// index <= j), so returning one would be misleading.
inline Element jth_root(const Element& x, const Integer& j) {
  if (j < 1) {
    throw DomainError("root order must be a positive integer, got " +
                      j.get_str());
  }
  if (x.is_zero()) {
    throw DomainError("the zero element has no unique root");
  }
  const Rational root_shift = x.shift() / Rational(j);
  const Rational steps{Integer(j - 1)};
  return Element::make(x.ambient(),
                       x.lo() + steps * std::min(Rational(0), root_shift),
                       root_shift,
                       x.hi() + steps * std::max(Rational(0), root_shift));
}

// ---------------------------------------------------------------------------
// Ideals
// ---------------------------------------------------------------------------

/// A two-sided ideal described by a height bound: the closed variant
/// ("I(mu)") holds every element of height <= mu and is principal; the open
/// variant ("K(mu)") holds every element of height < mu and is not.
class Ideal {
 public:
  static Ideal closed(int ambient, Rational bound) {
    check_ambient(ambient);
    if (bound != Rational(-1) &&
        (bound < Rational(0) || Rational(ambient - 1) < bound)) {
      throw ValidationError("closed ideal bound must be -1 or in [0, n-1], "
                            "got " + bound.str());
    }
    return Ideal(ambient, std::move(bound), true);
  }

  static Ideal open(int ambient, Rational bound) {
    check_ambient(ambient);
    if (bound <= Rational(0) || Rational(ambient - 1) < bound) {
      throw ValidationError("open ideal bound must be in (0, n-1], got " +
                            bound.str());
    }
    return Ideal(ambient, std::move(bound), false);
  }

  /// Accepts "I(mu)" or "K(mu)" with mu in rational syntax.
  static Ideal parse(std::string_view text, int ambient) {
    detail::TextCursor cursor{text};
    cursor.skip_ws();
    bool is_closed;
    if (cursor.consume('I')) {
      is_closed = true;
    } else if (cursor.consume('K')) {
      is_closed = false;
    } else {
      throw ParseError("expected ideal", cursor.pos, {"I", "K"});
    }
    cursor.expect('(', "(");
    const Rational bound = detail::parse_rational_token(cursor);
    cursor.expect(')', ")");
    cursor.skip_ws();
    if (!cursor.at_end()) {
      throw ParseError("trailing characters after ideal", cursor.pos,
                       {"end of input"});
    }
    return is_closed ? closed(ambient, bound) : open(ambient, bound);
  }

  int ambient() const { return ambient_; }
  const Rational& bound() const { return bound_; }
  bool is_closed() const { return closed_; }

  bool contains(const Element& x) const {
    if (x.ambient() != ambient_) {
      throw DomainError("ambient size mismatch: ideal over n=" +
                        std::to_string(ambient_) + ", element over n=" +
                        std::to_string(x.ambient()));
    }
    return closed_ ? x.height() <= bound_ : x.height() < bound_;
  }

  std::string str() const {
    return std::string(closed_ ? "I(" : "K(") + bound_.str() + ")";
  }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ambient_ == b.ambient_ && a.closed_ == b.closed_ &&
           a.bound_ == b.bound_;
  }

 private:
  Ideal(int ambient, Rational bound, bool closed)
      : ambient_(ambient), bound_(std::move(bound)), closed_(closed) {}

  static void check_ambient(int ambient) {
    if (ambient < 2) {
      throw ValidationError("ambient size must be >= 2, got " +
                            std::to_string(ambient));
    }
  }

  int ambient_;
  Rational bound_;
  bool closed_;
};

/// The principal ideal generated by x: closed, with bound height(x).
inline Ideal principal_ideal_of(const Element& x) {
  return Ideal::closed(x.ambient(), x.height());
}

/// Factors y as z * x * w; possible iff height(y) <= height(x).  When y is
/// zero the factors are (0, 0); otherwise both factors are nonzero, and
/// they are points whenever y is a point.
inline std::optional<std::pair<Element, Element>> factor_through(
    const Element& y, const Element& x) {
  y.require_same_ambient(x);
  if (x.height() < y.height()) return std::nullopt;
  const int n = y.ambient();
  if (y.is_zero()) {
    return std::make_pair(Element::zero(n), Element::zero(n));
  }
  Element left = Element::make(n, y.lo(), x.lo() - y.lo(), y.hi());
  Element right =
      Element::make(n, x.lo() + x.shift(),
                    y.lo() + y.shift() - x.lo() - x.shift(),
                    x.lo() + x.shift() + y.hi() - y.lo());
  return std::make_pair(std::move(left), std::move(right));
}

// ---------------------------------------------------------------------------
// Brandt subsemigroup, transport between ambient sizes, circle morphism
// ---------------------------------------------------------------------------

/// Membership in the Brandt subsemigroup: the zero element and the points.
inline bool in_brandt(const Element& x) {
  return x.is_zero() || x.is_point();
}

/// The affine isomorphism onto the monoid of ambient size q: fixes 1,
/// rescales segment and shift by (q-1)/(n-1).  Inverse: iso_map(., n).
inline Element iso_map(const Element& x, int target_ambient) {
  if (target_ambient < 2) {
    throw ValidationError("ambient size must be >= 2, got " +
                          std::to_string(target_ambient));
  }
  if (x.is_zero()) return Element::zero(target_ambient);
  const Rational scale =
      Rational(target_ambient - 1) / Rational(x.ambient() - 1);
  return Element::make(target_ambient,
                       Rational(1) + scale * (x.lo() - Rational(1)),
                       scale * x.shift(),
                       Rational(1) + scale * (x.hi() - Rational(1)));
}

/// Image in the circle group with a zero adjoined: the origin, or the unit
/// circle point e^{i*angle} stored by its exact exponent.  Angles of
/// element images stay within the arc |angle| <= 1, and multiplying
/// elements with nonzero product adds angles exactly.
class CircleImage {
 public:
  static CircleImage origin() { return CircleImage(); }

  static CircleImage on_circle(Rational angle) {
    if (Rational(1) < angle.abs()) {
      throw ValidationError("circle image outside the reachable arc: |" +
                            angle.str() + "| > 1");
    }
    return CircleImage(std::move(angle));
  }

  bool is_origin() const { return origin_; }

  const Rational& angle() const {
    if (origin_) {
      throw DomainError("the origin of the circle group has no angle");
    }
    return angle_;
  }

  std::string str() const { return origin_ ? "0" : angle_.str(); }

  friend bool operator==(const CircleImage& a, const CircleImage& b) {
    if (a.origin_ || b.origin_) return a.origin_ && b.origin_;
    return a.angle_ == b.angle_;
  }

  friend std::ostream& operator<<(std::ostream& os, const CircleImage& c) {
    return os << c.str();
  }

 private:
  CircleImage() : origin_(true), angle_(0) {}
  explicit CircleImage(Rational angle)
      : origin_(false), angle_(std::move(angle)) {}

  bool origin_;
  Rational angle_;
};

/// The idempotent-pure 0-morphism into the circle group: zero to the
/// origin, nonzero x to angle shift/(n-1).  Exactly the idempotents map to
/// angle 0, and only zero maps to the origin.
inline CircleImage circle_morphism(const Element& x) {
  if (x.is_zero()) return CircleImage::origin();
  return CircleImage::on_circle(x.shift() / Rational(x.ambient() - 1));
}

// ---------------------------------------------------------------------------
// A witness family of unbounded heights
// ---------------------------------------------------------------------------

/// The i-th member of the family (1, 2^-i, n - 2^-i).  Heights are
/// n - 2^-i - 1, strictly increasing in i with supremum n-1, never
/// attained.
inline Element sierpinski_element(int ambient, int i) {
  if (i < 1) {
    throw ValidationError("family index must be >= 1, got " +
                          std::to_string(i));
  }
  Integer power_of_two;
  mpz_ui_pow_ui(power_of_two.get_mpz_t(), 2,
                static_cast<unsigned long>(i));
  const Rational step(Integer(1), power_of_two);
  return Element::make(ambient, Rational(1), step, Rational(ambient) - step);
}

}  // namespace segmon
