#include "superbw/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "superbw/report_io.hpp"

namespace superbw {

namespace {

std::string trim(std::string s) {
  const auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

BWClass parse_bw_triple(const FieldDescriptor& field, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(trim(item));
  if (parts.size() != 3) {
    throw std::invalid_argument("bad BW triple '" + text + "' (expected e,a,d)");
  }
  Sign eps;
  if (parts[0] == "+") eps = Sign::plus;
  else if (parts[0] == "-") eps = Sign::minus;
  else throw std::invalid_argument("bad BW sign '" + parts[0] + "' (expected + or -)");

  std::int64_t a_int = 0;
  std::int64_t d_int = 0;
  try {
    a_int = std::stoll(parts[1]);
    d_int = std::stoll(parts[2]);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad BW component in '" + text + "'");
  }
  const SquareClass a = square_class(field, a_int);
  if (a.is_zero()) throw std::invalid_argument("BW square-class component '" + parts[1] +
                                               "' is zero");
  if (d_int != 1 && d_int != -1) {
    throw std::invalid_argument("bad Brauer component '" + parts[2] + "' (expected 1 or -1)");
  }
  return make_bw(eps, a, BrauerClass::from_rep(field, static_cast<int>(d_int)));
}

bool report_fully_determined(const ClassificationReport& r) {
  return r.a_component.has_value() && r.d_component.has_value() && r.endo_name.has_value();
}

OrderedJson orbit_json(const GroupSpec& group, const Weight& weight) {
  OrderedJson j;
  j["group"] = group.str();
  j["weight"] = weight;
  const Weight star = star_involution(group, weight);
  j["star_involution"] = star;
  j["star_fixed"] = star == weight ? "yes" : "no";
  if (has_twist_chain(group)) {
    const TwistResult twist = galois_twist_chain(group, weight);
    OrderedJson steps = OrderedJson::array();
    for (const TwistStep& step : twist.chain) {
      OrderedJson s;
      s["root"] = step.root;
      s["applied"] = step.applied;
      steps.push_back(std::move(s));
    }
    j["twist_chain"] = std::move(steps);
    j["final_weight"] = twist.final_weight;
    j["parity_flips"] = twist.parity_flips;
  }
  return j;
}

std::string orbit_text(const GroupSpec& group, const Weight& weight) {
  std::string out;
  const Weight star = star_involution(group, weight);
  out += "group:           " + group.str() + "\n";
  out += "weight:          " + weight_str(weight) + "\n";
  out += "star_involution: " + weight_str(star) + "\n";
  out += std::string("star_fixed:      ") + (star == weight ? "yes" : "no") + "\n";
  if (has_twist_chain(group)) {
    const TwistResult twist = galois_twist_chain(group, weight);
    out += "twist chain (from the star-twisted weight):\n";
    for (std::size_t i = 0; i < twist.chain.size(); ++i) {
      out += "  root " + weight_str(twist.chain[i].root) +
             (twist.chain[i].applied ? "  applied" : "  skipped") + "\n";
    }
    out += "final_weight:    " + weight_str(twist.final_weight) + "\n";
    out += "parity_flips:    " + std::to_string(twist.parity_flips) + "\n";
  } else {
    out += "twist chain:     none for this family\n";
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brauer-Wall classes of Clifford superalgebras and classification data of "
               "irreducible supergroup representations"};
  app.name("superbw");
  app.require_subcommand(1);

  // bw
  auto* bw_cmd = app.add_subcommand("bw", "Brauer-Wall group operations");
  bw_cmd->require_subcommand(1);
  std::string bw_field = "R";

  // Triples like "-,1,1" start with a dash, so they are picked up from the
  // unmatched arguments rather than through positional options.
  auto* bw_mul_cmd = bw_cmd->add_subcommand("mul", "multiply two classes given as e,a,d");
  bw_mul_cmd->add_option("--field", bw_field, "R or Fp:<prime>");
  bw_mul_cmd->allow_extras();

  auto* bw_inv_cmd = bw_cmd->add_subcommand("inv", "invert a class given as e,a,d");
  bw_inv_cmd->add_option("--field", bw_field, "R or Fp:<prime>");
  bw_inv_cmd->allow_extras();

  auto* bw_table_cmd = bw_cmd->add_subcommand("table", "the eight named real classes");
  bw_table_cmd->add_option("--field", bw_field, "must be R");

  // clifford
  auto* clifford_cmd =
      app.add_subcommand("clifford", "Wall class of a diagonal quadratic form");
  std::string clifford_field = "R";
  std::string clifford_form;
  bool clifford_semisimple = false;
  clifford_cmd->add_option("--field", clifford_field, "R or Fp:<prime>");
  clifford_cmd->add_option("--form,-q", clifford_form, "comma-separated coefficients")->required();
  clifford_cmd->add_flag("--semisimple", clifford_semisimple,
                         "classify the maximal semisimple quotient (also the default route "
                         "for degenerate forms)");

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "full classification report for (group, weight)");
  std::string classify_group, classify_weight, classify_format = "json";
  bool classify_strict = false;
  classify_cmd->add_option("--group", classify_group, "group spec, e.g. q:4 or qpq:2,1")
      ->required();
  classify_cmd->add_option("--weight", classify_weight, "comma-separated integers")->required();
  classify_cmd->add_option("--format", classify_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  classify_cmd->add_flag("--strict", classify_strict,
                         "exit 3 when the report has undetermined components");

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "star-orbit and twist-chain trace");
  std::string orbit_group, orbit_weight, orbit_format = "text";
  orbit_cmd->add_option("--group", orbit_group, "group spec")->required();
  orbit_cmd->add_option("--weight", orbit_weight, "comma-separated integers")->required();
  orbit_cmd->add_option("--format", orbit_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (bw_mul_cmd->parsed() || bw_inv_cmd->parsed()) {
      const FieldDescriptor field = FieldDescriptor::parse(bw_field);
      CLI::App* cmd = bw_mul_cmd->parsed() ? bw_mul_cmd : bw_inv_cmd;
      const std::vector<std::string> triples = cmd->remaining();
      const std::size_t expected = bw_mul_cmd->parsed() ? 2 : 1;
      if (triples.size() != expected) {
        std::string got;
        for (const auto& t : triples) got += " '" + t + "'";
        err << "error: expected " << expected << " class argument(s), got" << got << "\n";
        return 2;
      }
      const BWClass x = parse_bw_triple(field, triples[0]);
      const BWClass result =
          bw_mul_cmd->parsed() ? bw_mul(x, parse_bw_triple(field, triples[1])) : bw_inv(x);
      out << result.str() << "\n";
      return 0;
    }
    if (bw_table_cmd->parsed()) {
      const FieldDescriptor field = FieldDescriptor::parse(bw_field);
      if (!field.is_real()) {
        err << "error: the named table exists over R only\n";
        return 2;
      }
      for (const BWClass& c : bw_real_generator_powers()) {
        out << c.str() << "  " << real_division_superalgebra_name(c) << "\n";
      }
      return 0;
    }
    if (clifford_cmd->parsed()) {
      const FieldDescriptor field = FieldDescriptor::parse(clifford_field);
      const DiagonalQuadraticForm q =
          DiagonalQuadraticForm::from_integers(field, parse_weight(clifford_form));
      // The CLI always reports the maximal semisimple quotient; on a
      // nondegenerate form that is the Clifford superalgebra itself.
      const BWClass bw = semisimple_wall_class(q);
      OrderedJson j;
      j["bw_class"] = bw_to_json(bw);
      if (field.is_real()) j["name"] = real_division_superalgebra_name(bw);
      out << j.dump(2) << "\n";
      return 0;
    }
    if (classify_cmd->parsed()) {
      const GroupSpec group = GroupSpec::parse(classify_group);
      const Weight weight = parse_weight(classify_weight);
      const ClassificationReport report = classify(group, weight);
      if (classify_format == "json") {
        out << report_to_json(report).dump(2) << "\n";
      } else {
        out << report_to_text(report);
      }
      if (classify_strict && !report_fully_determined(report)) return 3;
      return 0;
    }
    if (orbit_cmd->parsed()) {
      const GroupSpec group = GroupSpec::parse(orbit_group);
      const Weight weight = parse_weight(orbit_weight);
      if (orbit_format == "json") {
        out << orbit_json(group, weight).dump(2) << "\n";
      } else {
        out << orbit_text(group, weight);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no command\n";
  return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace superbw
