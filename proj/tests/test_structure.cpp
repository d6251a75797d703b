#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "segmon/element.hpp"
#include "segmon/sampling.hpp"
#include "segmon/structure.hpp"

using segmon::CircleImage;
using segmon::DomainError;
using segmon::Element;
using segmon::ElementSampler;
using segmon::GreenRelation;
using segmon::Ideal;
using segmon::Integer;
using segmon::ParseError;
using segmon::Rational;
using segmon::ValidationError;
using segmon::sierpinski_element;

namespace {
Rational rat(const char* text) { return Rational::parse(text); }
Element elem(const char* text, int n = 3) { return Element::parse(text, n); }

// Least power that vanishes, found by multiplying; the independent check
// for the closed-form index.
Integer index_by_iteration(const Element& x, int cap = 10000) {
  Element power = x;
  Integer count(1);
  while (!power.is_zero() && count <= cap) {
    power = power * x;
    count += 1;
  }
  REQUIRE(power.is_zero());
  return count;
}
}  // namespace

TEST_SUITE("structure") {

TEST_CASE("nilpotent index closed form") {
  CHECK(*nilpotent_index(elem("(1,2,1)")) == 2);    // a point
  CHECK(*nilpotent_index(elem("(2,-1,2)")) == 2);   // a point
  CHECK(*nilpotent_index(elem("(1,1/2,2)")) == 4);
  CHECK(*nilpotent_index(elem("(1,1,2)")) == 3);
  CHECK_FALSE(nilpotent_index(Element::zero(3)).has_value());
  CHECK_FALSE(nilpotent_index(elem("(1,0,2)")).has_value());

  SUBCASE("agrees with iterated multiplication") {
    CHECK(index_by_iteration(elem("(1,1/2,2)")) == 4);
    CHECK(index_by_iteration(elem("(1,1,2)")) == 3);
    ElementSampler sampler(3, 71);
    for (int i = 0; i < 200; ++i) {
      const Element x = sampler.nilpotent();
      CHECK(*nilpotent_index(x) == index_by_iteration(x));
    }
  }

  SUBCASE("index grows without bound as the shift shrinks") {
    for (int t = 1; t <= 50; ++t) {
      const Element x = Element::make(3, 1, Rational(Integer(1), Integer(t)), 2);
      CHECK(*nilpotent_index(x) == t + 2);
    }
  }
}

TEST_CASE("unique j-th roots") {
  CHECK(segmon::jth_root(elem("(1,1,2)"), 2) == elem("(1,1/2,5/2)"));
  CHECK(segmon::jth_root(elem("(1,1,2)"), 2).pow(2) == elem("(1,1,2)"));
  // negative shift: the segment start moves instead of the end
  CHECK(segmon::jth_root(elem("(2,-1,3)"), 2) == elem("(3/2,-1/2,3)"));
  CHECK(segmon::jth_root(elem("(2,-1,3)"), 2).pow(2) == elem("(2,-1,3)"));

  ElementSampler sampler(3, 73);
  for (int i = 0; i < 200; ++i) {
    const Element x = sampler.nonzero();
    CHECK(segmon::jth_root(x, 1) == x);
    const Integer j(1 + static_cast<long>(sampler.below(10)));
    CHECK(segmon::jth_root(x, j).pow(j) == x);
  }
  const Element e = elem("(3/2,0,2)");
  CHECK(segmon::jth_root(e, 5) == e);

  CHECK_THROWS_AS(segmon::jth_root(Element::zero(3), 2), DomainError);
  CHECK_THROWS_AS(segmon::jth_root(elem("(1,1,2)"), 0), DomainError);

  SUBCASE("no second root exists on a small exhaustive grid") {
    // all of ambient 2 with coordinate denominators 1 or 2
    std::set<Rational> segment_values, shift_values;
    for (int den = 1; den <= 2; ++den) {
      for (int num = den; num <= 2 * den; ++num) {
        segment_values.insert(Rational(Integer(num), Integer(den)));
      }
      for (int num = -den; num <= den; ++num) {
        shift_values.insert(Rational(Integer(num), Integer(den)));
      }
    }
    std::vector<Element> grid;
    for (const auto& lo : segment_values) {
      for (const auto& shift : shift_values) {
        for (const auto& hi : segment_values) {
          if (auto x = Element::try_make(2, lo, shift, hi)) {
            grid.push_back(*x);
          }
        }
      }
    }
    for (const Integer& j : {Integer(2), Integer(3)}) {
      for (const Element& y : grid) {
        const Element x = y.pow(j);
        if (!x.is_zero()) {
          CHECK(segmon::jth_root(x, j) == y);
        }
      }
    }
  }
}

TEST_CASE("Green relations, closed forms") {
  const Element x = elem("(1,1,2)");
  CHECK(green_related(GreenRelation::R, x, elem("(1,1/2,2)")));
  CHECK(green_related(GreenRelation::D, x, elem("(2,-1,3)")));
  CHECK_FALSE(green_related(GreenRelation::H, x, elem("(2,-1,3)")));
  CHECK_FALSE(green_related(GreenRelation::J, Element::zero(3), x));
  CHECK(green_related(GreenRelation::J, Element::zero(3), Element::zero(3)));
  CHECK(green_related(GreenRelation::L, x, elem("(3/2,1/2,5/2)")));

  ElementSampler sampler(3, 79);
  for (int i = 0; i < 200; ++i) {
    const Element a = sampler.nonzero();
    const Element b = sampler.nonzero();
    CHECK(green_related(GreenRelation::R, a, b) == (a.range() == b.range()));
    CHECK(green_related(GreenRelation::L, a, b) == (a.domain() == b.domain()));
    CHECK(green_related(GreenRelation::H, a, b) == (a == b));
    CHECK(green_related(GreenRelation::D, a, b) ==
          green_related(GreenRelation::J, a, b));
  }

  SUBCASE("letters parse case-insensitively") {
    CHECK(segmon::green_relation_from_letter('r') == GreenRelation::R);
    CHECK(segmon::green_relation_from_letter('J') == GreenRelation::J);
    CHECK(segmon::letter(GreenRelation::H) == 'H');
    CHECK_THROWS_AS(segmon::green_relation_from_letter('x'), ValidationError);
  }
}

TEST_CASE("D-class witness") {
  const Element x = elem("(1,1,2)");
  const Element y = elem("(2,-1,3)");
  const auto z = d_class_witness(x, y);
  REQUIRE(z.has_value());
  CHECK(*z == elem("(2,0,3)"));
  CHECK(z->domain() == x.domain());
  CHECK(z->range() == y.range());

  SUBCASE("postconditions on random D-related pairs") {
    for (const int n : {3, 5}) {
      ElementSampler sampler(n, 83);
      for (int i = 0; i < 200; ++i) {
        const Element a = sampler.nonzero();
        const auto self = d_class_witness(a, a);
        REQUIRE(self.has_value());
        CHECK(self->domain() == a.domain());
        CHECK(self->range() == a.range());

        const Element b = sampler.nonzero();
        const auto witness = d_class_witness(a, b);
        CHECK(witness.has_value() == (a.height() == b.height()));
        if (witness) {
          CHECK(witness->domain() == a.domain());
          CHECK(witness->range() == b.range());
        }
      }
    }
  }

  CHECK_FALSE(d_class_witness(elem("(1,0,3)"), elem("(1,1,2)")).has_value());
  CHECK_THROWS_AS(d_class_witness(Element::zero(3), elem("(1,1,2)")),
                  DomainError);
}

TEST_CASE("ideal bounds and membership") {
  CHECK(Ideal::closed(3, -1).contains(Element::zero(3)));
  CHECK_FALSE(Ideal::closed(3, -1).contains(elem("(1,2,1)")));
  CHECK(Ideal::closed(3, 0).contains(elem("(1,2,1)")));
  CHECK(Ideal::closed(3, 0).contains(Element::zero(3)));
  CHECK_FALSE(Ideal::closed(3, 0).contains(elem("(1,1,2)")));
  CHECK(Ideal::open(3, 1).contains(elem("(1,1/2,3/2)")));
  CHECK_FALSE(Ideal::open(3, 1).contains(elem("(1,1/2,2)")));
  CHECK(Ideal::closed(3, 2).contains(Element::identity(3)));

  SUBCASE("bound validation") {
    CHECK_THROWS_AS(Ideal::closed(3, rat("-1/2")), ValidationError);
    CHECK_THROWS_AS(Ideal::closed(3, rat("5/2")), ValidationError);
    CHECK_THROWS_AS(Ideal::open(3, 0), ValidationError);
    CHECK_THROWS_AS(Ideal::open(3, -1), ValidationError);
    CHECK_THROWS_AS(Ideal::open(3, rat("9/4")), ValidationError);
    CHECK(Ideal::open(3, 2).is_closed() == false);
    CHECK_THROWS_AS(Ideal::closed(1, 0), ValidationError);
  }

  SUBCASE("text form") {
    CHECK(Ideal::closed(3, rat("3/2")).str() == "I(3/2)");
    CHECK(Ideal::open(3, 1).str() == "K(1)");
    CHECK(Ideal::parse("I(3/2)", 3) == Ideal::closed(3, rat("3/2")));
    CHECK(Ideal::parse(" K( 1 ) ", 3) == Ideal::open(3, 1));
    CHECK_THROWS_AS(Ideal::parse("J(1)", 3), ParseError);
    CHECK_THROWS_AS(Ideal::parse("I(1) extra", 3), ParseError);
    CHECK_THROWS_AS(Ideal::parse("K(0)", 3), ValidationError);
  }

  SUBCASE("ambient mismatch") {
    CHECK_THROWS_AS(Ideal::closed(3, 1).contains(Element::zero(2)),
                    DomainError);
  }
}

TEST_CASE("principal ideals") {
  CHECK(principal_ideal_of(Element::identity(3)) == Ideal::closed(3, 2));
  CHECK(principal_ideal_of(Element::zero(3)) == Ideal::closed(3, -1));
  CHECK(principal_ideal_of(elem("(1,1/2,2)")) == Ideal::closed(3, 1));

  SUBCASE("ideals absorb two-sided products") {
    ElementSampler sampler(3, 89);
    for (int i = 0; i < 200; ++i) {
      const Element x = sampler.nonzero();
      const Element a = sampler.element();
      const Element b = sampler.element();
      CHECK(principal_ideal_of(x).contains(a * x * b));
    }
  }

  SUBCASE("strict inclusion with separating witnesses") {
    ElementSampler sampler(3, 97);
    for (int i = 0; i < 200; ++i) {
      const Element u = sampler.nonzero();
      const Element v = sampler.nonzero();
      if (u.height() == v.height()) continue;
      const Element& taller = u.height() > v.height() ? u : v;
      const Element& shorter = u.height() > v.height() ? v : u;
      CHECK(principal_ideal_of(taller).contains(shorter));
      CHECK_FALSE(principal_ideal_of(shorter).contains(taller));
    }
  }
}

TEST_CASE("factorization through an element") {
  SUBCASE("worked example") {
    const Element y = elem("(2,0,2)");
    const Element x = elem("(1,1,2)");
    const auto factors = factor_through(y, x);
    REQUIRE(factors.has_value());
    CHECK(factors->first == elem("(2,-1,2)"));
    CHECK(factors->second == elem("(2,0,2)"));
    CHECK(factors->first * x * factors->second == y);
  }

  SUBCASE("self factorization") {
    const Element x = elem("(1,1/2,2)");
    const auto factors = factor_through(x, x);
    REQUIRE(factors.has_value());
    CHECK(factors->first * x * factors->second == x);
  }

  SUBCASE("impossible above the height") {
    CHECK_FALSE(factor_through(Element::identity(3), elem("(1,1/2,2)")));
    CHECK_FALSE(factor_through(elem("(1,0,2)"), elem("(1,2,1)")));
    CHECK_FALSE(factor_through(elem("(1,2,1)"), Element::zero(3)));
  }

  SUBCASE("zero factors through anything") {
    const auto factors = factor_through(Element::zero(3), elem("(1,1,2)"));
    REQUIRE(factors.has_value());
    CHECK(factors->first.is_zero());
    CHECK(factors->second.is_zero());
    CHECK(factor_through(Element::zero(3), Element::zero(3)).has_value());
  }

  SUBCASE("random pairs, both directions") {
    ElementSampler sampler(3, 101);
    for (int i = 0; i < 300; ++i) {
      const Element y = sampler.element();
      const Element x = sampler.element();
      const auto factors = factor_through(y, x);
      CHECK(factors.has_value() == (y.height() <= x.height()));
      if (factors) {
        CHECK(factors->first * x * factors->second == y);
        if (y.is_point()) {
          CHECK(in_brandt(factors->first));
          CHECK(in_brandt(factors->second));
        }
      }
    }
  }
}

TEST_CASE("Brandt membership and closure") {
  CHECK(in_brandt(elem("(2,-1,2)")));
  CHECK(in_brandt(Element::zero(3)));
  CHECK_FALSE(in_brandt(elem("(1,0,2)")));

  ElementSampler sampler(3, 103);
  for (int i = 0; i < 200; ++i) {
    // shrink two samples to points; those stay closed under product and
    // inverse, and comparable points coincide
    const Element a = sampler.nonzero();
    const Element b = sampler.nonzero();
    const Element pa = Element::make(3, a.lo(), a.shift(), a.lo());
    const Element pb = Element::make(3, b.lo(), b.shift(), b.lo());
    CHECK(in_brandt(pa * pb));
    CHECK(in_brandt(pa.inverse()));
    if (pa.leq(pb) || pb.leq(pa)) {
      CHECK(pa == pb);
    }
  }
}

TEST_CASE("products can die at the third factor") {
  const Element x = elem("(1,1,2)");
  CHECK_FALSE((x * x).is_zero());
  CHECK((x * x * x).is_zero());
}

TEST_CASE("height-equal comparable elements coincide") {
  ElementSampler sampler(3, 107);
  for (int i = 0; i < 200; ++i) {
    const auto [x, y] = sampler.comparable_pair();
    if (x.height() == y.height()) CHECK(x == y);
  }
}

TEST_CASE("transport between ambient sizes") {
  CHECK(iso_map(Element::identity(3), 2) == Element::identity(2));
  CHECK(iso_map(elem("(1,1,2)"), 2) == Element::parse("(1,1/2,3/2)", 2));
  CHECK(iso_map(Element::zero(3), 5).is_zero());
  CHECK_THROWS_AS(iso_map(elem("(1,1,2)"), 1), ValidationError);

  ElementSampler sampler(3, 109);
  for (int i = 0; i < 200; ++i) {
    const Element x = sampler.element();
    const Element y = sampler.element();
    for (int q : {2, 4, 7}) {
      CHECK(iso_map(iso_map(x, q), 3) == x);
      CHECK(iso_map(x * y, q) == iso_map(x, q) * iso_map(y, q));
      if (!x.is_zero()) {
        CHECK(iso_map(x, q).height() * Rational(2) ==
              x.height() * Rational(q - 1));
      }
    }
  }
}

TEST_CASE("circle morphism") {
  CHECK(circle_morphism(elem("(1,1,2)")) == CircleImage::on_circle(rat("1/2")));
  CHECK(circle_morphism(Element::zero(3)).is_origin());
  CHECK(circle_morphism(elem("(1,0,2)")).angle() == 0);
  CHECK_THROWS_AS(CircleImage::on_circle(rat("3/2")), ValidationError);
  CHECK_THROWS_AS(circle_morphism(Element::zero(3)).angle(), DomainError);
  CHECK(circle_morphism(Element::zero(3)).str() == "0");
  CHECK(circle_morphism(elem("(2,-1,3)")).str() == "-1/2");

  ElementSampler sampler(3, 113);
  for (int i = 0; i < 300; ++i) {
    const Element x = sampler.nonzero();
    const Element y = sampler.nonzero();
    CHECK(circle_morphism(x).angle().abs() <= 1);
    CHECK((circle_morphism(x).angle() == 0) == x.is_idempotent());
    if (!(x * y).is_zero()) {
      CHECK(circle_morphism(x * y).angle() ==
            circle_morphism(x).angle() + circle_morphism(y).angle());
    }
  }
}

TEST_CASE("height witness family") {
  CHECK(sierpinski_element(2, 1) == Element::parse("(1,1/2,3/2)", 2));
  CHECK(sierpinski_element(2, 1).height() == rat("1/2"));
  CHECK(sierpinski_element(3, 2) == elem("(1,1/4,11/4)"));
  CHECK(sierpinski_element(3, 2).height() == rat("7/4"));
  CHECK_THROWS_AS(sierpinski_element(3, 0), ValidationError);
  CHECK_THROWS_AS(sierpinski_element(1, 1), ValidationError);

  Rational previous(-1);
  for (int i = 1; i <= 30; ++i) {
    const Element member = sierpinski_element(3, i);
    CHECK(member.height() > previous);
    CHECK(member.height() < 2);
    previous = member.height();
  }
}

}  // TEST_SUITE
