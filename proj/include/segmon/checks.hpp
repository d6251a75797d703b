#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "segmon/element.hpp"
#include "segmon/errors.hpp"
#include "segmon/rational.hpp"
#include "segmon/rook.hpp"
#include "segmon/sampling.hpp"
#include "segmon/structure.hpp"

namespace segmon {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;  // empty when passed
};

struct CheckOptions {
  int ambient = 3;
  std::size_t samples = 400;
  std::uint64_t seed = 0x5e69001dULL;
};

namespace checks {

// Each group returns "" on success or a description of the first failure.
using GroupFn = std::string (*)(const CheckOptions&, ElementSampler&);

inline std::string describe(const char* law, const Element& x) {
  return std::string(law) + "  x=" + x.str();
}
inline std::string describe(const char* law, const Element& x,
                            const Element& y) {
  return std::string(law) + "  x=" + x.str() + "  y=" + y.str();
}
inline std::string describe(const char* law, const Element& x,
                            const Element& y, const Element& z) {
  return std::string(law) + "  x=" + x.str() + "  y=" + y.str() +
         "  z=" + z.str();
}

inline std::string check_associativity(const CheckOptions& options,
                                       ElementSampler& sampler) {
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Element x = sampler.element();
    const Element y = sampler.element();
    const Element z = sampler.element();
    Element left = (x * y) * z;
#ifdef SEGMON_CHECK_FAULT_INJECTION
    // Deliberately corrupted build: falsify the first comparison so the
    // nonzero-exit path of `check` can be exercised end to end.
    if (i == 0) {
      left = left.is_identity() ? Element::zero(options.ambient)
                                : Element::identity(options.ambient);
    }
#endif
    if (left != x * (y * z)) {
      return describe("(xy)z != x(yz)", x, y, z);
    }
  }
  return "";
}

inline std::string check_inverses(const CheckOptions& options,
                                  ElementSampler& sampler) {
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Element x = sampler.element();
    const Element y = sampler.element();
    const Element xi = x.inverse();
    if (x * xi * x != x) return describe("x xT x != x", x);
    if (xi * x * xi != xi) return describe("xT x xT != xT", x);
    if (xi.inverse() != x) return describe("(xT)T != x", x);
    if ((x * y).inverse() != y.inverse() * x.inverse()) {
      return describe("(xy)T != yT xT", x, y);
    }
    if (x.range() != x * xi) return describe("range(x) != x xT", x);
    if (x.domain() != xi * x) return describe("domain(x) != xT x", x);
  }
  return "";
}

inline std::string check_idempotents(const CheckOptions& options,
                                     ElementSampler& sampler) {
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Element e = sampler.nonzero_idempotent();
    const Element f = sampler.nonzero_idempotent();
    if (!e.is_idempotent() || e * e != e) {
      return describe("sampled idempotent fails e*e == e", e);
    }
    if (e * f != f * e) return describe("idempotents do not commute", e, f);

    // The product is the intersection of the two segments.
    const Rational lo = std::max(e.lo(), f.lo());
    const Rational hi = std::min(e.hi(), f.hi());
    const Element expected = hi < lo
                                 ? Element::zero(options.ambient)
                                 : Element::make(options.ambient, lo,
                                                 Rational(0), hi);
    if (e * f != expected) {
      return describe("idempotent product is not segment intersection", e, f);
    }

    const Element x = sampler.nonzero();
    const bool fixed = x.pow(2) == x;
    if (fixed != (x.shift() == Rational(0))) {
      return describe("x^2 == x iff shift == 0 fails", x);
    }
  }
  return "";
}

inline std::string check_zero_product_guard(const CheckOptions& options,
                                            ElementSampler& sampler) {
  const Rational limit(options.ambient - 1);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Element x = sampler.nonzero();
    const Element y = sampler.nonzero();
    const Rational total = x.shift() + y.shift();
    if (limit < total.abs() && !(x * y).is_zero()) {
      return describe("|shift sum| > n-1 but product is nonzero", x, y);
    }
  }
  return "";
}

inline std::string check_height_laws(const CheckOptions& options,
                                     ElementSampler& sampler) {
  const int n = options.ambient;
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Element x = sampler.nonzero();
    const Rational h = x.height();
    if (h < Rational(0) || Rational(n) - x.shift().abs() - Rational(1) < h) {
      return describe("height outside [0, n-|shift|-1]", x);
    }
    if ((h == Rational(0)) != x.is_point()) {
      return describe("height 0 must mean a point", x);
    }
    if ((h == Rational(n - 1)) != x.is_identity()) {
      return describe("height n-1 must mean the identity", x);
    }
    if (x.range().height() != h || x.domain().height() != h) {
      return describe("height not preserved by range/domain", x);
    }

    const Element y = sampler.nonzero();
    const Element z = sampler.nonzero();
    const Element product = x * y * z;
    const Rational hp = product.height();
    if (hp > h || hp > y.height() || hp > z.height()) {
      return describe("product height exceeds a factor height", x, y, z);
    }
  }
  if (Element::zero(n).height() != Rational(-1)) {
    return "zero element height must be -1";
  }
  if (Element::identity(n).height() != Rational(n - 1)) {
    return "identity height must be n-1";
  }
  return "";
}

inline std::string check_natural_order(const CheckOptions& options,
                                       ElementSampler& sampler) {
  const Element zero = Element::zero(options.ambient);
  for (std::size_t i = 0; i < options.samples; ++i) {
    // Alternate generic pairs with pairs below an idempotent so the
    // E*-unitary premise is exercised, not vacuous.
    const auto [x, y] =
        (i % 2 == 0)
            ? sampler.comparable_pair()
            : sampler.comparable_pair_below(sampler.nonzero_idempotent());
    if (!x.leq(y)) return describe("constructed pair is not comparable", x, y);
    if (x != x * x.inverse() * y) {
      return describe("x <= y but x != x xT y", x, y);
    }
    if (!x.is_zero() && x.is_idempotent() && !y.is_idempotent()) {
      return describe("nonzero idempotent below a non-idempotent", x, y);
    }
    if (x.height() == y.height() && x != y) {
      return describe("equal heights and comparable but distinct", x, y);
    }
    if (!zero.leq(y) || zero != zero * zero.inverse() * y) {
      return describe("zero is not least below y", y);
    }

    const Element a = sampler.nonzero();
    const Element b = sampler.nonzero();
    if (a.leq(b) != (a == a * a.inverse() * b)) {
      return describe("leq disagrees with x == x xT y", a, b);
    }
  }
  return "";
}

inline std::string check_powers(const CheckOptions& options,
                                ElementSampler& sampler) {
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Element x = sampler.element();
    const unsigned long j = 1 + static_cast<unsigned long>(sampler.below(20));
    Element folded = x;
    for (unsigned long step = 1; step < j; ++step) folded = folded * x;
    if (x.pow(Integer(j)) != folded) {
      return describe("closed-form power differs from the fold", x) +
             "  j=" + std::to_string(j);
    }
  }
  return "";
}

inline std::string check_nilpotent_index(const CheckOptions& options,
                                         ElementSampler& sampler) {
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Element x = sampler.nilpotent();
    const auto index = nilpotent_index(x);
    if (!index) return describe("nilpotent reported as non-nilpotent", x);
    Element power = x;
    Integer count(1);
    while (!power.is_zero() && count < *index + 2) {
      power = power * x;
      count += 1;
    }
    if (count != *index || !power.is_zero()) {
      return describe("nilpotent index disagrees with iteration", x) +
             "  index=" + index->get_str();
    }
    if (x.pow(*index - 1).is_zero()) {
      return describe("power below the index already vanished", x);
    }
  }
  const Element idem = sampler.nonzero_idempotent();
  if (nilpotent_index(idem) || nilpotent_index(Element::zero(options.ambient))) {
    return "idempotents and zero must not report a nilpotent index";
  }
  return "";
}

inline std::string check_roots(const CheckOptions& options,
                               ElementSampler& sampler) {
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Element x = sampler.nonzero();
    const Integer j(1 + static_cast<unsigned long>(sampler.below(10)));
    const Element root = jth_root(x, j);
    if (root.pow(j) != x) {
      return describe("jth_root does not recover x under pow", x) +
             "  j=" + j.get_str();
    }
    if (x.is_idempotent() && root != x) {
      return describe("root of an idempotent must be itself", x);
    }
  }
  return "";
}

inline std::string check_matrix_oracle(const CheckOptions&, ElementSampler&) {
  for (int n = 2; n <= 4; ++n) {
    const auto elements = enumerate_integer_monoid(n);
    for (const auto& x : elements) {
      const RookMatrix mx = to_matrix(x);
      const auto back = from_matrix(mx);
      if (!back || *back != x) {
        return "matrix round trip failed for x=" + x.str();
      }
      if (to_matrix(x.inverse()) != mx.transposed()) {
        return "matrix transpose differs from inverse for x=" + x.str();
      }
      for (const auto& y : elements) {
        if (to_matrix(x * y) != mx * to_matrix(y)) {
          return "matrix product mismatch at x=" + x.str() +
                 " y=" + y.str() + " (n=" + std::to_string(n) + ")";
        }
      }
    }
  }
  return "";
}

inline std::string check_green_definitional(const CheckOptions&,
                                            ElementSampler&) {
  for (int n = 2; n <= 3; ++n) {
    for (const GreenRelation rel :
         {GreenRelation::R, GreenRelation::L, GreenRelation::H,
          GreenRelation::D, GreenRelation::J}) {
      const GreenTable table = definitional_green(rel, n);
      const auto count = table.elements.size();
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
          if (table.related[i][j] !=
              green_related(rel, table.elements[i], table.elements[j])) {
            return std::string("closed-form ") + letter(rel) +
                   " disagrees with the definitional table at x=" +
                   table.elements[i].str() + " y=" + table.elements[j].str();
          }
        }
      }
    }
    const GreenTable d_table = definitional_green(GreenRelation::D, n);
    const GreenTable j_table = definitional_green(GreenRelation::J, n);
    if (d_table.related != j_table.related) {
      return "J and D differ on the enumerated monoid, n=" +
             std::to_string(n);
    }
  }
  return "";
}

inline std::string check_ideals_factorization(const CheckOptions& options,
                                              ElementSampler& sampler) {
  const int n = options.ambient;
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Element x = sampler.element();
    const Element y = sampler.element();
    const auto factors = factor_through(y, x);
    if ((y.height() <= x.height()) != factors.has_value()) {
      return describe("factorization existence differs from height test", y,
                      x);
    }
    if (factors) {
      const auto& [z, w] = *factors;
      if (z * x * w != y) {
        return describe("z x w != y in factorization", y, x) +
               "  z=" + z.str() + "  w=" + w.str();
      }
      if (y.is_point() && !(in_brandt(z) && in_brandt(w))) {
        return describe("point factorization left the Brandt part", y, x);
      }
    }

    // Two-sided closure of both ideal kinds around a contained element.
    const Element member = sampler.nonzero();
    const Element a = sampler.element();
    const Element b = sampler.element();
    const Ideal closed = principal_ideal_of(member);
    if (!closed.contains(member)) {
      return describe("principal ideal misses its generator", member);
    }
    if (!closed.contains(a * member * b)) {
      return describe("closed ideal not closed under products", member);
    }
    if (member.height() < Rational(n - 1)) {
      // Any open bound above height(member) must keep a*member*b inside.
      const Rational bound =
          sampler.rational_between(member.height(), Rational(n - 1));
      if (Rational(0) < bound && member.height() < bound) {
        const Ideal open = Ideal::open(n, bound);
        if (!open.contains(member) || !open.contains(a * member * b)) {
          return describe("open ideal not closed under products", member);
        }
      }
    }

    // Strict total order with a boundary witness at the smaller bound.
    const Element u = sampler.nonzero();
    const Element v = sampler.nonzero();
    const Rational mu = std::min(u.height(), v.height());
    const Rational xi = std::max(u.height(), v.height());
    if (mu < xi) {
      const Ideal smaller = Ideal::closed(n, mu);
      const Ideal larger = Ideal::closed(n, xi);
      const Element& witness = u.height() == xi ? u : v;
      if (!larger.contains(witness) || smaller.contains(witness)) {
        return describe("ideal order misses the separating witness", u, v);
      }
    }

    // Brandt part: closed under products and inverses; points are
    // primitive under the natural order.
    const auto [p, q] = sampler.comparable_pair();
    if (p.is_point() && q.is_point() && p != q) {
      return describe("distinct comparable points", p, q);
    }
    const Element point_product =
        (u.is_point() && v.is_point()) ? u * v : Element::zero(n);
    if (!in_brandt(point_product) || !in_brandt(point_product.inverse())) {
      return describe("Brandt part not closed", u, v);
    }
  }
  if (!Ideal::closed(n, Rational(-1)).contains(Element::zero(n))) {
    return "I(-1) must contain the zero element";
  }
  if (!Ideal::closed(n, Rational(n - 1)).contains(Element::identity(n))) {
    return "I(n-1) must contain the identity";
  }
  return "";
}

inline std::string check_morphisms(const CheckOptions& options,
                                   ElementSampler& sampler) {
  const int n = options.ambient;
  const int q = n == 2 ? 3 : 2;
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Element x = sampler.nonzero();
    const Element y = sampler.nonzero();

    const CircleImage ix = circle_morphism(x);
    if (Rational(1) < ix.angle().abs()) {
      return describe("circle image outside the arc", x);
    }
    if ((ix.angle() == Rational(0)) != x.is_idempotent()) {
      return describe("circle morphism is not idempotent-pure", x);
    }
    const Element product = x * y;
    if (!product.is_zero()) {
      const Rational total = ix.angle() + circle_morphism(y).angle();
      if (circle_morphism(product) != CircleImage::on_circle(total)) {
        return describe("circle morphism is not additive", x, y);
      }
    }
    if (!circle_morphism(Element::zero(n)).is_origin()) {
      return "zero must map to the origin";
    }

    const Element tx = iso_map(x, q);
    if (iso_map(x * y, q) != tx * iso_map(y, q)) {
      return describe("iso_map is not a homomorphism", x, y);
    }
    if (tx.height() * Rational(n - 1) != x.height() * Rational(q - 1)) {
      return describe("iso_map height scaling is off", x);
    }
    if (iso_map(tx, n) != x) {
      return describe("iso_map round trip failed", x);
    }
  }
  if (iso_map(Element::identity(n), q) != Element::identity(q)) {
    return "iso_map must send identity to identity";
  }
  return "";
}

inline std::string check_groupoid_units(const CheckOptions& options,
                                        ElementSampler& sampler) {
  const int n = options.ambient;
  const Element one = Element::identity(n);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Element x = sampler.nonzero();
    const Element y = sampler.nonzero();
    const auto composed = restricted_product(x, y);
    if (composed.has_value() != (x.domain() == y.range())) {
      return describe("restricted product defined outside domain==range", x,
                      y);
    }
    if (composed) {
      if (*composed != x * y) {
        return describe("restricted product differs from the product", x, y);
      }
      if (!composed->is_zero() &&
          *composed != Element::make(n, x.lo(), x.shift() + y.shift(),
                                     x.hi())) {
        return describe("restricted product has the wrong closed form", x, y);
      }
    }
    // x composes with its inverse and with its domain idempotent.
    const auto with_inverse = restricted_product(x, x.inverse());
    if (!with_inverse || *with_inverse != x.range()) {
      return describe("x . xT must be defined and equal range(x)", x);
    }
    if (!restricted_product(x, x.domain()).has_value()) {
      return describe("x . domain(x) must be defined", x);
    }

    if (x * y == one && (x != one || y != one)) {
      return describe("xy == 1 with a factor != 1", x, y);
    }
  }
  if (one * one != one ||
      !restricted_product(Element::zero(n), Element::zero(n)).has_value()) {
    return "unit and zero composition basics failed";
  }
  return "";
}

inline std::string check_witness_families(const CheckOptions& options,
                                          ElementSampler& sampler) {
  const int n = options.ambient;
  Rational previous(-1);
  for (int i = 1; i <= 30; ++i) {
    const Element member = sierpinski_element(n, i);
    Integer power_of_two;
    mpz_ui_pow_ui(power_of_two.get_mpz_t(), 2, static_cast<unsigned long>(i));
    const Rational expected =
        Rational(n) - Rational(Integer(1), power_of_two) - Rational(1);
    if (member.height() != expected) {
      return "family member " + std::to_string(i) + " has height " +
             member.height().str() + ", expected " + expected.str();
    }
    if (member.height() <= previous) {
      return "family heights must strictly increase";
    }
    previous = member.height();
  }

  // Products can vanish at the third factor without vanishing at the
  // second.
  const Element witness = Element::make(3, 1, 1, 2);
  if ((witness * witness).is_zero() ||
      !(witness * witness * witness).is_zero()) {
    return "index-3 nilpotent witness misbehaved";
  }

  for (std::size_t i = 0; i < options.samples; ++i) {
    const Element x = sampler.element();
    if (!x.is_idempotent() && !nilpotent_index(x)) {
      return describe("element neither idempotent nor nilpotent", x);
    }
  }
  return "";
}

inline std::string check_text_roundtrip(const CheckOptions& options,
                                        ElementSampler& sampler) {
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Element x = sampler.element();
    const Element reparsed = Element::parse(x.str(), options.ambient);
    if (reparsed != x || reparsed.str() != x.str()) {
      return describe("canonical text round trip failed", x);
    }
  }
  return "";
}

}  // namespace checks

/// Runs every property group with an independent deterministic sampler.
/// One CheckResult per group; all groups run even after a failure.
inline std::vector<CheckResult> run_checks(const CheckOptions& options) {
  const std::pair<const char*, checks::GroupFn> groups[] = {
      {"associativity", checks::check_associativity},
      {"inverse-involution", checks::check_inverses},
      {"idempotent-semilattice", checks::check_idempotents},
      {"zero-product-guard", checks::check_zero_product_guard},
      {"height-laws", checks::check_height_laws},
      {"natural-order", checks::check_natural_order},
      {"power-closed-form", checks::check_powers},
      {"nilpotent-index", checks::check_nilpotent_index},
      {"unique-roots", checks::check_roots},
      {"matrix-oracle", checks::check_matrix_oracle},
      {"green-definitional", checks::check_green_definitional},
      {"ideals-factorization", checks::check_ideals_factorization},
      {"morphisms", checks::check_morphisms},
      {"groupoid-units", checks::check_groupoid_units},
      {"witness-families", checks::check_witness_families},
      {"text-roundtrip", checks::check_text_roundtrip},
  };

  std::vector<CheckResult> results;
  std::uint64_t salt = 0;
  for (const auto& [name, run] : groups) {
    ElementSampler sampler(options.ambient,
                           options.seed + 0x9e3779b97f4a7c15ULL * ++salt);
    std::string detail = run(options, sampler);
    results.push_back({name, detail.empty(), std::move(detail)});
  }
  return results;
}

}  // namespace segmon
