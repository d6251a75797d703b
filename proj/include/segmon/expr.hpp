#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "segmon/element.hpp"
#include "segmon/errors.hpp"
#include "segmon/rational.hpp"

namespace segmon {

/// Abstract syntax for the small element-expression language:
///
///   expr    := term (('*' | juxtaposition) term)*
///   term    := atom postfix*
///   postfix := '^' positive-integer | 'T'
///   atom    := '0' | '(' rat ',' rat ',' rat ')' | '(' expr ')'
///   rat     := ['-'] digits ['/' digits]
///
/// Products associate to the left; postfix operators bind tighter than
/// products and apply left to right, so "(1,1,2)T^2" squares the inverse.
/// All literals of one expression share a single ambient size.
class Expression {
 public:
  enum class Kind { Literal, Product, Power, Transpose };

  static Expression literal(Element value) {
    Expression out(Kind::Literal, value.ambient());
    out.value_ = std::move(value);
    return out;
  }

  static Expression product(Expression left, Expression right) {
    if (left.ambient() != right.ambient()) {
      throw DomainError("expression operands have mismatched ambient sizes");
    }
    Expression out(Kind::Product, left.ambient());
    out.left_ = std::make_unique<Expression>(std::move(left));
    out.right_ = std::make_unique<Expression>(std::move(right));
    return out;
  }

  static Expression power(Expression base, Integer exponent) {
    if (exponent < 1) {
      throw DomainError("expression exponent must be >= 1, got " +
                        exponent.get_str());
    }
    Expression out(Kind::Power, base.ambient());
    out.left_ = std::make_unique<Expression>(std::move(base));
    out.exponent_ = std::move(exponent);
    return out;
  }

  static Expression transpose(Expression operand) {
    Expression out(Kind::Transpose, operand.ambient());
    out.left_ = std::make_unique<Expression>(std::move(operand));
    return out;
  }

  Kind kind() const { return kind_; }
  int ambient() const { return ambient_; }

  const Element& literal_value() const {
    require_kind(Kind::Literal);
    return *value_;
  }
  const Expression& left() const {
    require_kind(Kind::Product);
    return *left_;
  }
  const Expression& right() const {
    require_kind(Kind::Product);
    return *right_;
  }
  const Expression& operand() const {
    if (kind_ != Kind::Power && kind_ != Kind::Transpose) {
      throw DomainError("expression node has no operand");
    }
    return *left_;
  }
  const Integer& exponent() const {
    require_kind(Kind::Power);
    return exponent_;
  }

  Element evaluate() const {
    switch (kind_) {
      case Kind::Literal: return *value_;
      case Kind::Product: return left_->evaluate() * right_->evaluate();
      case Kind::Power: return left_->evaluate().pow(exponent_);
      case Kind::Transpose: return left_->evaluate().inverse();
    }
    throw std::logic_error("unreachable expression kind");
  }

 private:
  Expression(Kind kind, int ambient) : kind_(kind), ambient_(ambient) {}

  void require_kind(Kind kind) const {
    if (kind_ != kind) {
      throw DomainError("expression node accessed with the wrong kind");
    }
  }

  Kind kind_;
  int ambient_;
  std::optional<Element> value_;       // Literal
  std::unique_ptr<Expression> left_;   // Product left / Power / Transpose
  std::unique_ptr<Expression> right_;  // Product right
  Integer exponent_;                   // Power
};

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, int ambient)
      : cursor_{text}, ambient_(ambient) {}

  Expression parse() {
    Expression out = parse_product();
    cursor_.skip_ws();
    if (!cursor_.at_end()) {
      throw ParseError("unexpected trailing input", cursor_.pos,
                       {"*", "^", "T", "end of input"});
    }
    return out;
  }

 private:
  Expression parse_product() {
    Expression out = parse_term();
    while (true) {
      cursor_.skip_ws();
      if (!cursor_.at_end() && cursor_.peek() == '*') {
        ++cursor_.pos;
        out = Expression::product(std::move(out), parse_term());
      } else if (!cursor_.at_end() &&
                 (cursor_.peek() == '0' || cursor_.peek() == '(')) {
        // juxtaposition
        out = Expression::product(std::move(out), parse_term());
      } else {
        break;
      }
    }
    return out;
  }

  Expression parse_term() {
    Expression out = parse_atom();
    while (true) {
      cursor_.skip_ws();
      if (!cursor_.at_end() && cursor_.peek() == '^') {
        ++cursor_.pos;
        cursor_.skip_ws();
        const std::size_t at = cursor_.pos;
        const Integer exponent = parse_integer_token(cursor_, false);
        if (exponent < 1) {
          throw ParseError("exponent must be >= 1", at,
                           {"positive integer"});
        }
        out = Expression::power(std::move(out), exponent);
      } else if (!cursor_.at_end() && cursor_.peek() == 'T') {
        ++cursor_.pos;
        out = Expression::transpose(std::move(out));
      } else {
        break;
      }
    }
    return out;
  }

  Expression parse_atom() {
    cursor_.skip_ws();
    if (cursor_.at_end()) {
      throw ParseError("expected element or '('", cursor_.pos, {"0", "("});
    }
    if (cursor_.peek() == '0') {
      ++cursor_.pos;
      return Expression::literal(Element::zero(ambient_));
    }
    if (cursor_.peek() != '(') {
      throw ParseError("expected element or '('", cursor_.pos, {"0", "("});
    }
    const std::size_t open = cursor_.pos;
    ++cursor_.pos;

    // '(' starts either a triplet literal or a parenthesized expression;
    // decide by probing for "rational ','".
    if (triplet_follows()) {
      cursor_.pos = open;
      return Expression::literal(parse_element_body(cursor_, ambient_));
    }
    Expression inner = parse_product();
    cursor_.expect(')', ")");
    return inner;
  }

  bool triplet_follows() {
    const std::size_t saved = cursor_.pos;
    bool is_triplet = false;
    try {
      parse_rational_token(cursor_);
      cursor_.skip_ws();
      is_triplet = !cursor_.at_end() && cursor_.peek() == ',';
    } catch (const ParseError&) {
      is_triplet = false;
    }
    cursor_.pos = saved;
    return is_triplet;
  }

  TextCursor cursor_;
  int ambient_;
};

}  // namespace detail

/// Parses the expression grammar above; every literal is validated against
/// the ambient size n.  Positions in ParseError are byte offsets into text.
inline Expression parse_expression(std::string_view text, int ambient) {
  detail::ExpressionParser parser(text, ambient);
  return parser.parse();
}

}  // namespace segmon
