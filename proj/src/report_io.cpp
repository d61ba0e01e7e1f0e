#include "superbw/report_io.hpp"

namespace superbw {

namespace {

std::string undetermined_tag(const std::string& reason) { return "undetermined(" + reason + ")"; }

OrderedJson a_json(const Determined<SquareClass>& a) {
  if (a.has_value()) return a.value->rep();
  return undetermined_tag(a.reason);
}

OrderedJson d_json(const Determined<BrauerClass>& d) {
  if (d.has_value()) return d.value->rep();
  return undetermined_tag(d.reason);
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

OrderedJson bw_to_json(const BWClass& bw) {
  OrderedJson j;
  j["epsilon"] = sign_str(bw.epsilon);
  j["a"] = bw.a.rep();
  j["d"] = bw.d.rep();
  return j;
}

OrderedJson report_to_json(const ClassificationReport& r) {
  OrderedJson j;
  j["group"] = r.group.str();
  j["field"] = r.group.base_field().str();
  j["weight"] = r.weight;
  j["in_xflat"] = xflat_str(r.in_xflat);
  j["d_lambda"] = r.d_lambda;
  j["delta_lambda"] = r.delta_lambda.rep();
  j["pi_self_iso"] = yesno(r.pi_self_iso);
  j["super_quasi_rational"] = yesno(r.super_quasi_rational);
  j["quasi_rational"] = yesno(r.quasi_rational);
  j["epsilon"] = sign_str(r.epsilon);
  j["a_component"] = a_json(r.a_component);
  j["d_component"] = d_json(r.d_component);
  OrderedJson bw;
  bw["epsilon"] = sign_str(r.epsilon);
  bw["a"] = a_json(r.a_component);
  bw["d"] = d_json(r.d_component);
  j["bw_class"] = bw;
  j["endo_name"] = r.endo_name.has_value() ? OrderedJson(*r.endo_name.value)
                                           : OrderedJson(undetermined_tag(r.endo_name.reason));
  j["center_even_field"] =
      r.center_even_field == CenterField::base ? "base" : "quadratic-extension";
  j["absolutely_irreducible"] = ternary_str(r.absolutely_irreducible);
  j["branch"] = r.branch;
  return j;
}

std::string report_to_text(const ClassificationReport& r) {
  auto det_str = [](const auto& component, auto&& show) -> std::string {
    if (component.has_value()) return show(*component.value);
    return "? (" + component.reason + ")";
  };
  std::string out;
  out += "group:                  " + r.group.str() + "\n";
  out += "field:                  " + r.group.base_field().str() + "\n";
  out += "weight:                 " + weight_str(r.weight) + "\n";
  out += "in_xflat:               " + std::string(xflat_str(r.in_xflat)) + "\n";
  out += "d_lambda:               " + std::to_string(r.d_lambda) + "\n";
  out += "delta_lambda:           " + r.delta_lambda.str() + "\n";
  out += "pi_self_iso:            " + std::string(yesno(r.pi_self_iso)) + "\n";
  out += "super_quasi_rational:   " + std::string(yesno(r.super_quasi_rational)) + "\n";
  out += "quasi_rational:         " + std::string(yesno(r.quasi_rational)) + "\n";
  out += "epsilon:                " + std::string(sign_str(r.epsilon)) + "\n";
  out += "a_component:            " +
         det_str(r.a_component, [](const SquareClass& a) { return a.str(); }) + "\n";
  out += "d_component:            " +
         det_str(r.d_component, [](const BrauerClass& d) { return d.str(); }) + "\n";
  if (auto bw = r.bw_class()) {
    out += "bw_class:               " + bw->str() + "\n";
  } else {
    out += "bw_class:               partial (see components)\n";
  }
  out += "endo_name:              " +
         det_str(r.endo_name, [](const std::string& s) { return s; }) + "\n";
  out += "center_even_field:      " +
         std::string(r.center_even_field == CenterField::base ? "base" : "quadratic-extension") +
         "\n";
  out += "absolutely_irreducible: " + std::string(ternary_str(r.absolutely_irreducible)) + "\n";
  out += "branch:                 " + r.branch + "\n";
  return out;
}

}  // namespace superbw
