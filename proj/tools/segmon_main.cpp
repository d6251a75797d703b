// Command-line front end for the segmon library: evaluates element
// expressions, runs structural queries, enumerates the integer submonoid,
// and executes the property-check suite.
//
// Exit codes: 0 success, 1 parse/validation error (including bad flags),
// 2 domain error (an operation applied outside its domain).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "segmon/checks.hpp"
#include "segmon/element.hpp"
#include "segmon/errors.hpp"
#include "segmon/expr.hpp"
#include "segmon/json_io.hpp"
#include "segmon/rook.hpp"
#include "segmon/structure.hpp"

namespace {

using segmon::CheckOptions;
using segmon::Element;
using segmon::Ideal;
using segmon::Integer;
using segmon::Rational;

bool g_json = false;

void print_element(const Element& x) {
  if (g_json) {
    std::cout << segmon::element_to_json(x).dump() << "\n";
  } else {
    std::cout << x.str() << "\n";
  }
}

void print_bool(bool value) {
  if (g_json) {
    std::cout << nlohmann::json{{"result", value}}.dump() << "\n";
  } else {
    std::cout << (value ? "true" : "false") << "\n";
  }
}

void print_field(const char* key, const std::string& value) {
  if (g_json) {
    std::cout << nlohmann::json{{key, value}}.dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
}

Integer parse_positive_integer(const std::string& text, const char* what) {
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw segmon::ValidationError(std::string(what) +
                                    " must be a positive integer, got '" +
                                    text + "'");
    }
  }
  if (text.empty()) {
    throw segmon::ValidationError(std::string(what) + " is missing");
  }
  Integer value(text);
  if (value < 1) {
    throw segmon::ValidationError(std::string(what) +
                                  " must be a positive integer, got '" +
                                  text + "'");
  }
  return value;
}

int run_check(const CheckOptions& options) {
  const auto results = segmon::run_checks(options);
  int failures = 0;
  for (const auto& result : results) {
    if (result.passed) {
      std::cout << "ok " << result.name << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << result.name << ": " << result.detail << "\n";
    }
  }
  if (failures > 0) {
    std::cerr << failures << " of " << results.size()
              << " property groups failed\n";
    return 1;
  }
  std::cout << "all " << results.size() << " property groups passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact algebra in an inverse monoid of shifted segments"};
  app.require_subcommand(1);

  int n = 0;
  std::string format = "text";
  std::string expr_text, elem_text, elem2_text, count_text, rel_text, mu_text;
  bool open_ideal = false;
  int target_q = 0;
  CheckOptions check_options;

  const auto add_n = [&n](CLI::App* cmd) {
    cmd->add_option("--n", n, "ambient size n (>= 2)")->required();
  };
  const auto add_format = [&format](CLI::App* cmd, bool with_dot) {
    cmd->add_option("--format", format,
                    with_dot ? "output format: text, json or dot"
                             : "output format: text or json")
        ->check(with_dot ? CLI::IsMember({"text", "json", "dot"})
                         : CLI::IsMember({"text", "json"}));
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate an expression");
  add_n(eval);
  add_format(eval, false);
  eval->add_option("expr", expr_text, "expression to evaluate")->required();

  CLI::App* mul = app.add_subcommand("mul", "multiply two elements");
  add_n(mul);
  add_format(mul, false);
  mul->add_option("x", elem_text)->required();
  mul->add_option("y", elem2_text)->required();

  CLI::App* pow = app.add_subcommand("pow", "raise an element to a power");
  add_n(pow);
  add_format(pow, false);
  pow->add_option("x", elem_text)->required();
  pow->add_option("j", count_text, "exponent (>= 1)")->required();

  CLI::App* root = app.add_subcommand("root", "unique j-th root");
  add_n(root);
  add_format(root, false);
  root->add_option("x", elem_text)->required();
  root->add_option("j", count_text, "root order (>= 1)")->required();

  CLI::App* inv = app.add_subcommand("inv", "semigroup inverse");
  add_n(inv);
  add_format(inv, false);
  inv->add_option("x", elem_text)->required();

  CLI::App* index = app.add_subcommand("index", "nilpotent index");
  add_n(index);
  add_format(index, false);
  index->add_option("x", elem_text)->required();

  CLI::App* height = app.add_subcommand("height", "height of an element");
  add_n(height);
  add_format(height, false);
  height->add_option("x", elem_text)->required();

  CLI::App* phi = app.add_subcommand("phi", "circle-group image");
  add_n(phi);
  add_format(phi, false);
  phi->add_option("x", elem_text)->required();

  CLI::App* green = app.add_subcommand("green", "test a Green relation");
  add_n(green);
  add_format(green, false);
  green->add_option("relation", rel_text, "one of R, L, H, D, J")->required();
  green->add_option("x", elem_text)->required();
  green->add_option("y", elem2_text)->required();

  CLI::App* order = app.add_subcommand("order", "natural partial order x <= y");
  add_n(order);
  add_format(order, false);
  order->add_option("x", elem_text)->required();
  order->add_option("y", elem2_text)->required();

  CLI::App* ideal = app.add_subcommand("ideal", "ideal membership");
  add_n(ideal);
  add_format(ideal, false);
  ideal->add_option("--mu", mu_text, "height bound")->required();
  ideal->add_flag("--open", open_ideal, "use the open ideal K(mu)");
  ideal->add_option("x", elem_text)->required();

  CLI::App* iso = app.add_subcommand("iso", "transport to another ambient size");
  add_n(iso);
  add_format(iso, false);
  iso->add_option("--q", target_q, "target ambient size (>= 2)")->required();
  iso->add_option("x", elem_text)->required();

  CLI::App* enumerate = app.add_subcommand("enum", "list the integer submonoid");
  add_n(enumerate);
  add_format(enumerate, true);

  CLI::App* check = app.add_subcommand("check", "run the property-check suite");
  add_n(check);
  check->add_option("--samples", check_options.samples,
                    "samples per property group");
  check->add_option("--seed", check_options.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    g_json = format == "json";
    if (eval->parsed()) {
      print_element(segmon::parse_expression(expr_text, n).evaluate());
    } else if (mul->parsed()) {
      print_element(Element::parse(elem_text, n) *
                    Element::parse(elem2_text, n));
    } else if (pow->parsed()) {
      print_element(Element::parse(elem_text, n)
                        .pow(parse_positive_integer(count_text, "exponent")));
    } else if (root->parsed()) {
      print_element(
          segmon::jth_root(Element::parse(elem_text, n),
                           parse_positive_integer(count_text, "root order")));
    } else if (inv->parsed()) {
      print_element(Element::parse(elem_text, n).inverse());
    } else if (index->parsed()) {
      const auto result = segmon::nilpotent_index(Element::parse(elem_text, n));
      if (!result) {
        throw segmon::DomainError("element is not nilpotent");
      }
      print_field("index", result->get_str());
    } else if (height->parsed()) {
      print_field("height", Element::parse(elem_text, n).height().str());
    } else if (phi->parsed()) {
      const auto image = segmon::circle_morphism(Element::parse(elem_text, n));
      if (g_json) {
        std::cout << (image.is_origin()
                          ? nlohmann::json{{"zero", true}}
                          : nlohmann::json{{"angle", image.angle().str()}})
                         .dump()
                  << "\n";
      } else {
        std::cout << image.str() << "\n";
      }
    } else if (green->parsed()) {
      if (rel_text.size() != 1) {
        throw segmon::ValidationError("relation must be a single letter, "
                                      "got '" + rel_text + "'");
      }
      print_bool(segmon::green_related(
          segmon::green_relation_from_letter(rel_text[0]),
          Element::parse(elem_text, n), Element::parse(elem2_text, n)));
    } else if (order->parsed()) {
      print_bool(
          Element::parse(elem_text, n).leq(Element::parse(elem2_text, n)));
    } else if (ideal->parsed()) {
      const Rational mu = Rational::parse(mu_text);
      const Ideal container =
          open_ideal ? Ideal::open(n, mu) : Ideal::closed(n, mu);
      print_bool(container.contains(Element::parse(elem_text, n)));
    } else if (iso->parsed()) {
      print_element(segmon::iso_map(Element::parse(elem_text, n), target_q));
    } else if (enumerate->parsed()) {
      if (format == "dot") {
        std::cout << segmon::eggbox_dot(n);
      } else if (format == "json") {
        std::cout << segmon::enumeration_to_json(n).dump(2) << "\n";
      } else {
        for (const auto& x : segmon::enumerate_integer_monoid(n)) {
          std::cout << x.str() << "\n";
        }
      }
    } else if (check->parsed()) {
      check_options.ambient = n;
      return run_check(check_options);
    }
  } catch (const segmon::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const segmon::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const segmon::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
