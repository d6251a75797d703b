#include <doctest.h>

#include <optional>

#include "segmon/element.hpp"
#include "segmon/sampling.hpp"

using segmon::DomainError;
using segmon::Element;
using segmon::ElementSampler;
using segmon::Integer;
using segmon::ParseError;
using segmon::Rational;
using segmon::ValidationError;

namespace {
Rational rat(const char* text) { return Rational::parse(text); }
Element elem(const char* text, int n = 3) { return Element::parse(text, n); }
}  // namespace

TEST_SUITE("element") {

TEST_CASE("make validates, never clamps") {
  CHECK(Element::make(3, 1, 0, 3) == Element::identity(3));
  CHECK(Element::make(3, 1, 2, 1).is_point());  // boundary: hi == n - shift
  CHECK_THROWS_AS(Element::make(3, 1, rat("5/2"), 1), ValidationError);
  CHECK_THROWS_AS(Element::make(3, 2, 0, 1), ValidationError);   // hi < lo
  CHECK_THROWS_AS(Element::make(2, rat("1/2"), 0, 1), ValidationError);
  CHECK_THROWS_AS(Element::make(3, 1, -1, 3), ValidationError);  // lo < 1+1
  CHECK(Element::make(3, 2, -1, 3).lo() == 2);

  SUBCASE("ambient below 2 is its own error") {
    CHECK_THROWS_WITH_AS(Element::make(1, 1, 0, 1),
                         doctest::Contains("ambient"), ValidationError);
    CHECK_THROWS_AS(Element::zero(1), ValidationError);
    CHECK_THROWS_AS(Element::identity(0), ValidationError);
  }

  SUBCASE("try_make mirrors make") {
    CHECK(Element::try_make(3, 1, 2, 1).has_value());
    CHECK_FALSE(Element::try_make(3, 1, rat("5/2"), 1).has_value());
    CHECK_FALSE(Element::try_make(1, 1, 0, 1).has_value());
  }
}

TEST_CASE("zero and identity") {
  CHECK(Element::identity(3).str() == "(1,0,3)");
  CHECK(Element::identity(2).str() == "(1,0,2)");
  CHECK(Element::zero(2).is_zero());
  CHECK(Element::zero(2).str() == "0");
  CHECK(Element::identity(3).is_identity());
  CHECK_THROWS_AS(Element::zero(3).lo(), DomainError);
}

TEST_CASE("product closed form") {
  CHECK(elem("(1,1,2)") * elem("(2,-1,3)") == elem("(1,0,2)"));
  CHECK((elem("(1,2,1)") * elem("(1,2,1)")).is_zero());
  CHECK(elem("(1,1/2,2)") * elem("(3/2,1/2,5/2)") == elem("(1,1,2)"));

  SUBCASE("zero absorbs, identity is neutral") {
    ElementSampler sampler(3, 11);
    for (int i = 0; i < 100; ++i) {
      const Element x = sampler.element();
      CHECK(Element::identity(3) * x == x);
      CHECK(x * Element::identity(3) == x);
      CHECK((Element::zero(3) * x).is_zero());
      CHECK((x * Element::zero(3)).is_zero());
    }
  }

  SUBCASE("ambient mismatch is an error") {
    CHECK_THROWS_AS(Element::identity(2) * Element::identity(3), DomainError);
    CHECK_THROWS_AS(static_cast<void>(Element::zero(2) == Element::zero(3)),
                    DomainError);
  }
}

TEST_CASE("inverse") {
  CHECK(elem("(1,1,2)").inverse() == elem("(2,-1,3)"));
  CHECK(Element::zero(3).inverse().is_zero());
  CHECK(elem("(1,0,2)").inverse() == elem("(1,0,2)"));
}

TEST_CASE("range and domain projections") {
  const Element x = elem("(1,1,2)");
  CHECK(x.range() == elem("(1,0,2)"));
  CHECK(x.domain() == elem("(2,0,3)"));
  CHECK(Element::zero(3).range().is_zero());
  CHECK(Element::zero(3).domain().is_zero());
  CHECK(x.range() == x * x.inverse());
  CHECK(x.domain() == x.inverse() * x);
  CHECK(x.range().is_idempotent());
  CHECK(x.domain().is_idempotent());
}

TEST_CASE("power closed form matches iterated product") {
  const Element x = elem("(1,1/2,2)");
  CHECK(x.pow(3) == elem("(1,3/2,1)"));
  CHECK(x.pow(3) == x * x * x);
  CHECK(x.pow(4).is_zero());
  CHECK((x * x * x * x).is_zero());
  CHECK(x.pow(1) == x);
  CHECK_THROWS_AS(x.pow(0), DomainError);

  const Element e = elem("(3/2,0,2)");
  for (int j = 1; j <= 6; ++j) CHECK(e.pow(j) == e);

  SUBCASE("fold equivalence on random elements") {
    ElementSampler sampler(3, 23);
    for (int i = 0; i < 200; ++i) {
      const Element y = sampler.element();
      Element folded = y;
      const int j = 1 + static_cast<int>(sampler.below(20));
      for (int step = 1; step < j; ++step) folded = folded * y;
      CHECK(y.pow(j) == folded);
    }
  }

  SUBCASE("x^2 == x exactly for shift 0") {
    ElementSampler sampler(3, 29);
    for (int i = 0; i < 200; ++i) {
      const Element y = sampler.nonzero();
      CHECK((y.pow(2) == y) == (y.shift() == Rational(0)));
    }
  }
}

TEST_CASE("idempotence predicate") {
  CHECK(elem("(2,0,2)").is_idempotent());
  CHECK(Element::zero(3).is_idempotent());
  CHECK_FALSE(elem("(1,1/2,2)").is_idempotent());
}

TEST_CASE("height") {
  CHECK(Element::identity(3).height() == 2);
  CHECK(Element::identity(5).height() == 4);
  CHECK(Element::zero(3).height() == -1);
  CHECK(elem("(1,1/2,2)").height() == 1);
  CHECK(elem("(1,2,1)").height() == 0);
}

TEST_CASE("natural partial order") {
  CHECK(elem("(3/2,0,2)").leq(elem("(1,0,2)")));
  CHECK_FALSE(elem("(1,1,2)").leq(elem("(1,0,3)")));  // shifts differ

  ElementSampler sampler(3, 31);
  for (int i = 0; i < 200; ++i) {
    const Element x = sampler.element();
    CHECK(x.leq(x));
    CHECK(Element::zero(3).leq(x));
    // definitional form: x <= y iff x == x xT y
    const Element y = sampler.element();
    CHECK(x.leq(y) == (x == x * x.inverse() * y));
  }
}

TEST_CASE("restricted product") {
  const auto defined = restricted_product(elem("(1,1,2)"), elem("(2,-1,3)"));
  REQUIRE(defined.has_value());
  CHECK(*defined == elem("(1,0,2)"));

  const auto zeros = restricted_product(Element::zero(3), Element::zero(3));
  REQUIRE(zeros.has_value());
  CHECK(zeros->is_zero());

  CHECK_FALSE(restricted_product(elem("(1,1,2)"), elem("(1,0,3)")));
  CHECK_FALSE(restricted_product(Element::zero(3), elem("(1,0,3)")));
  CHECK_FALSE(restricted_product(elem("(1,0,3)"), Element::zero(3)));

  SUBCASE("defined exactly when domain meets range") {
    ElementSampler sampler(3, 37);
    for (int i = 0; i < 200; ++i) {
      const Element x = sampler.nonzero();
      const Element y = sampler.nonzero();
      const auto composed = restricted_product(x, y);
      CHECK(composed.has_value() == (x.domain() == y.range()));
      if (composed) {
        CHECK(*composed == x * y);
        if (!composed->is_zero()) {
          CHECK(*composed == Element::make(3, x.lo(),
                                           x.shift() + y.shift(), x.hi()));
        }
      }
    }
  }
}

TEST_CASE("inverse semigroup laws hold exactly") {
  ElementSampler sampler(3, 41);
  for (int i = 0; i < 300; ++i) {
    const Element x = sampler.element();
    const Element y = sampler.element();
    const Element z = sampler.element();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * x.inverse() * x == x);
    CHECK(x.inverse() * x * x.inverse() == x.inverse());
    CHECK(x.inverse().inverse() == x);
    CHECK((x * y).inverse() == y.inverse() * x.inverse());
  }
}

TEST_CASE("idempotents commute and intersect segments") {
  ElementSampler sampler(3, 43);
  for (int i = 0; i < 200; ++i) {
    const Element e = sampler.nonzero_idempotent();
    const Element f = sampler.nonzero_idempotent();
    CHECK(e * f == f * e);
    const Rational lo = std::max(e.lo(), f.lo());
    const Rational hi = std::min(e.hi(), f.hi());
    if (hi < lo) {
      CHECK((e * f).is_zero());
    } else {
      CHECK(e * f == Element::make(3, lo, 0, hi));
    }
  }
}

TEST_CASE("zero-product guard on shifts") {
  ElementSampler sampler(3, 47);
  for (int i = 0; i < 300; ++i) {
    const Element x = sampler.nonzero();
    const Element y = sampler.nonzero();
    if ((x.shift() + y.shift()).abs() > Rational(2)) {
      CHECK((x * y).is_zero());
    }
  }
}

TEST_CASE("height laws under products and projections") {
  ElementSampler sampler(3, 53);
  for (int i = 0; i < 200; ++i) {
    const Element x = sampler.nonzero();
    CHECK(x.height() >= 0);
    CHECK(x.height() <= Rational(3) - x.shift().abs() - Rational(1));
    CHECK(x.range().height() == x.height());
    CHECK(x.domain().height() == x.height());
    const Element y = sampler.nonzero();
    const Element z = sampler.nonzero();
    const Element product = x * y * z;
    CHECK(product.height() <= x.height());
    CHECK(product.height() <= y.height());
    CHECK(product.height() <= z.height());
  }
}

TEST_CASE("only the identity divides the identity") {
  ElementSampler sampler(3, 59);
  const Element one = Element::identity(3);
  CHECK(one * one == one);
  for (int i = 0; i < 300; ++i) {
    const Element x = sampler.element();
    const Element y = sampler.element();
    if (x * y == one) {
      CHECK(x == one);
      CHECK(y == one);
    }
  }
}

TEST_CASE("nonzero idempotents sit below idempotents only") {
  ElementSampler sampler(3, 61);
  for (int i = 0; i < 200; ++i) {
    const auto [x, y] = sampler.comparable_pair_below(
        i % 2 == 0 ? sampler.nonzero_idempotent() : sampler.nonzero());
    if (!x.is_zero() && x.is_idempotent() && x.leq(y)) {
      CHECK(y.is_idempotent());
    }
  }
}

TEST_CASE("canonical text round trip") {
  CHECK(elem("0").is_zero());
  CHECK(elem("(1,1/2,2)").str() == "(1,1/2,2)");
  CHECK(elem(" ( 3/2 , -1/2 , 2 ) ", 3) == Element::make(3, rat("3/2"), rat("-1/2"), 2));
  CHECK(elem("(2,4/8,5/2)").str() == "(2,1/2,5/2)");  // lowest terms on output

  ElementSampler sampler(4, 67);
  for (int i = 0; i < 200; ++i) {
    const Element x = sampler.element();
    CHECK(Element::parse(x.str(), 4) == x);
  }

  SUBCASE("rejects malformed text") {
    CHECK_THROWS_AS(Element::parse("", 3), ParseError);
    CHECK_THROWS_AS(Element::parse("(1,1)", 3), ParseError);
    CHECK_THROWS_AS(Element::parse("(1,1,2", 3), ParseError);
    CHECK_THROWS_AS(Element::parse("(1,1,2))", 3), ParseError);
    CHECK_THROWS_AS(Element::parse("00", 3), ParseError);
    CHECK_THROWS_AS(Element::parse("(a,b,c)", 3), ParseError);
    CHECK_THROWS_AS(Element::parse("(1,5/2,1)", 3), ParseError);  // bounds
  }

  SUBCASE("parse errors carry positions") {
    try {
      Element::parse("(1,1,2", 3);
      FAIL("expected ParseError");
    } catch (const ParseError& error) {
      CHECK(error.position() == 6);
      REQUIRE(!error.expected().empty());
      CHECK(error.expected().front() == ")");
    }
  }
}

}  // TEST_SUITE
