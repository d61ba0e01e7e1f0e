#pragma once

#include <optional>
#include <string>

#include "superbw/clifford.hpp"
#include "superbw/supergroups.hpp"

namespace superbw {

enum class Ternary { yes, no, unknown };
const char* ternary_str(Ternary t);

enum class CenterField { base, quadratic_extension };

// A value the classification either pins down or declines to guess. An
// undetermined component always carries the reason.
template <typename T>
struct Determined {
  std::optional<T> value;
  std::string reason;

  bool has_value() const { return value.has_value(); }
  static Determined of(T v) { return {std::move(v), {}}; }
  static Determined undetermined(std::string why) { return {std::nullopt, std::move(why)}; }
  friend bool operator==(const Determined&, const Determined&) = default;
};

// The full verdict bundle for one (group, weight) input.
struct ClassificationReport {
  GroupSpec group;
  Weight weight;
  XflatVerdict in_xflat = XflatVerdict::unknown;
  int d_lambda = 0;
  SquareClass delta_lambda;  // Zero when the nondegenerate part is empty
  bool pi_self_iso = false;
  bool super_quasi_rational = false;
  bool quasi_rational = false;
  Sign epsilon = Sign::plus;
  Determined<SquareClass> a_component;
  Determined<BrauerClass> d_component;
  Determined<std::string> endo_name;
  CenterField center_even_field = CenterField::base;
  Ternary absolutely_irreducible = Ternary::unknown;
  std::string branch;

  // Present exactly when both the a and D components are determined.
  std::optional<BWClass> bw_class() const;
};

// Dispatches on the applicable classification branch. Throws
// std::invalid_argument on weight-length mismatch, a nonmember weight, or an
// unsupported (family, field) pair.
ClassificationReport classify(const GroupSpec& g, const Weight& lambda);

// beta^super of the split route: the Wall class of the semisimplified
// Clifford superalgebra of q^{-lambda}. Split queer groups only.
BWClass split_route_class(const GroupSpec& g, const Weight& lambda);

// The worked closed forms for split queer groups (real sign-count expression
// over R, residue expression over F_p), exposed so tests can compare the two
// routes.
BWClass split_closed_form_class(const GroupSpec& g, const Weight& lambda);

// Closed-form class for the quaternion queer family: the split closed form
// with the quaternion restriction cocycle (-1)^{|lambda|} folded into D.
BWClass quaternion_queer_closed_form_class(const GroupSpec& g, const Weight& lambda);

}  // namespace superbw
