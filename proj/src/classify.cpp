#include "superbw/classify.hpp"

#include <stdexcept>

namespace superbw {

const char* ternary_str(Ternary t) {
  switch (t) {
    case Ternary::yes: return "yes";
    case Ternary::no: return "no";
    default: return "unknown";
  }
}

std::optional<BWClass> ClassificationReport::bw_class() const {
  if (!a_component.has_value() || !d_component.has_value()) return std::nullopt;
  return BWClass{epsilon, *a_component.value, *d_component.value};
}

namespace {

struct FormData {
  int d = 0;
  SquareClass delta;  // Zero when the nondegenerate part is empty
};

FormData form_data(const GroupSpec& g, const Weight& lambda) {
  const DiagonalQuadraticForm q = q_lambda_form(g, lambda);
  const RadicalSplit split = split_radical(q);
  return FormData{static_cast<int>(split.nondegenerate.size()),
                  split.nondegenerate.size() ? signed_discriminant(split.nondegenerate)
                                             : SquareClass::zero(q.field)};
}

bool in_squares_or_zero(const SquareClass& c) { return c.is_zero() || c.is_square(); }

Ternary absolute_irreducibility(bool quasi_rational, Sign eps,
                                const Determined<SquareClass>& a,
                                const Determined<BrauerClass>& d) {
  if (!quasi_rational) return Ternary::no;
  if (!a.has_value() || !d.has_value()) return Ternary::unknown;
  const bool in_set = d.value->is_trivial() && (eps == Sign::minus || a.value->is_square());
  return in_set ? Ternary::yes : Ternary::no;
}

ClassificationReport base_report(const GroupSpec& g, const Weight& lambda) {
  ClassificationReport r{g,
                         lambda,
                         XflatVerdict::unknown,
                         0,
                         SquareClass::zero(g.base_field()),
                         false,
                         false,
                         false,
                         Sign::plus,
                         Determined<SquareClass>::undetermined("unset"),
                         Determined<BrauerClass>::undetermined("unset"),
                         Determined<std::string>::undetermined("unset"),
                         CenterField::base,
                         Ternary::unknown,
                         {}};
  return r;
}

ClassificationReport classify_split(const GroupSpec& g, const Weight& lambda) {
  ClassificationReport r = base_report(g, lambda);
  const FormData fd = form_data(g, lambda);
  const BWClass bw = split_route_class(g, lambda);

  r.d_lambda = fd.d;
  r.delta_lambda = fd.delta;
  r.pi_self_iso = !(fd.d % 2 == 0 && in_squares_or_zero(fd.delta));
  r.super_quasi_rational = true;
  r.quasi_rational = true;
  r.epsilon = bw.epsilon;
  r.a_component = Determined<SquareClass>::of(bw.a);
  r.d_component = Determined<BrauerClass>::of(bw.d);
  r.endo_name = g.base_field().is_real()
                    ? Determined<std::string>::of(real_division_superalgebra_name(bw))
                    : Determined<std::string>::undetermined(
                          "division superalgebra names are tabulated only over R");
  r.center_even_field = CenterField::base;
  r.absolutely_irreducible =
      absolute_irreducibility(r.quasi_rational, r.epsilon, r.a_component, r.d_component);
  r.branch = "split: Wall class of the semisimplified Clifford superalgebra of q^(-lambda)";
  return r;
}

ClassificationReport classify_h1_zero(const GroupSpec& g, const Weight& lambda) {
  ClassificationReport r = base_report(g, lambda);
  const bool fixed = star_involution(g, lambda) == lambda;

  r.super_quasi_rational = fixed;
  r.quasi_rational = fixed;
  r.epsilon = Sign::plus;
  if (fixed) {
    r.a_component = Determined<SquareClass>::of(SquareClass::one(g.base_field()));
    r.d_component = Determined<BrauerClass>::undetermined(
        "even-part restriction cocycle is not tabulated for this family");
    r.endo_name = Determined<std::string>::undetermined(
        "Brauer component of the endomorphism class is undetermined");
    r.center_even_field = CenterField::base;
    r.absolutely_irreducible = Ternary::unknown;
    r.branch = "h1=0: star-fixed weight; class (+,1,D) with D from the even-part cocycle";
  } else {
    r.a_component = Determined<SquareClass>::undetermined(
        "not super quasi-rational: no (epsilon,a,D) coordinates");
    r.d_component = Determined<BrauerClass>::undetermined(
        "not super quasi-rational: no (epsilon,a,D) coordinates");
    r.endo_name = Determined<std::string>::of("C");
    r.center_even_field = CenterField::quadratic_extension;
    r.absolutely_irreducible = Ternary::no;
    r.branch = "h1=0: star-orbit of size two; restriction of scalars from C";
  }
  return r;
}

ClassificationReport classify_twist_chain(const GroupSpec& g, const Weight& lambda) {
  ClassificationReport r = base_report(g, lambda);
  const TwistResult twist = galois_twist_chain(g, lambda);
  const bool fixed = twist.final_weight == lambda;
  const bool odd_parity = twist.parity_flips % 2 == 1;

  r.super_quasi_rational = fixed;
  r.quasi_rational = fixed && !odd_parity;
  r.epsilon = Sign::plus;
  if (r.quasi_rational) {
    r.a_component = Determined<SquareClass>::of(SquareClass::one(g.base_field()));
    r.d_component = Determined<BrauerClass>::undetermined(
        "cocycle of the odd-reflection chain is not evaluated");
    r.endo_name = Determined<std::string>::undetermined(
        "Brauer component of the endomorphism class is undetermined");
    r.center_even_field = CenterField::base;
    r.absolutely_irreducible = Ternary::unknown;
    r.branch = "odd-reflection chain: weight fixed with even parity";
  } else if (r.super_quasi_rational) {
    // Parity-twisted descent over R pins a = -1.
    r.a_component = Determined<SquareClass>::of(square_class(g.base_field(), -1));
    r.d_component = Determined<BrauerClass>::undetermined(
        "cocycle of the odd-reflection chain is not evaluated");
    r.endo_name = Determined<std::string>::undetermined(
        "class is (+,-1,D) with the Brauer component undetermined");
    r.center_even_field = CenterField::base;
    r.absolutely_irreducible = Ternary::no;
    r.branch = "odd-reflection chain: weight fixed with odd parity";
  } else {
    r.a_component = Determined<SquareClass>::undetermined(
        "not super quasi-rational: no (epsilon,a,D) coordinates");
    r.d_component = Determined<BrauerClass>::undetermined(
        "not super quasi-rational: no (epsilon,a,D) coordinates");
    r.endo_name = Determined<std::string>::of("C");
    r.center_even_field = CenterField::quadratic_extension;
    r.absolutely_irreducible = Ternary::no;
    r.branch = "odd-reflection chain: weight moved by the twisted Galois action";
  }
  return r;
}

ClassificationReport classify_quaternion_queer(const GroupSpec& g, const Weight& lambda) {
  ClassificationReport r = base_report(g, lambda);
  const FormData fd = form_data(g, lambda);
  const BWClass bw = quaternion_queer_closed_form_class(g, lambda);

  r.d_lambda = fd.d;
  r.delta_lambda = fd.delta;
  r.pi_self_iso = fd.d % 2 == 1;
  r.super_quasi_rational = true;
  r.quasi_rational = fd.d % 2 == 1 || in_squares_or_zero(fd.delta);
  r.epsilon = bw.epsilon;
  r.a_component = Determined<SquareClass>::of(bw.a);
  r.d_component = Determined<BrauerClass>::of(bw.d);
  r.endo_name = Determined<std::string>::of(real_division_superalgebra_name(bw));
  r.center_even_field = CenterField::base;
  r.absolutely_irreducible =
      absolute_irreducibility(r.quasi_rational, r.epsilon, r.a_component, r.d_component);
  r.branch = "transfer through the split form (trivial star-action)";
  return r;
}

ClassificationReport classify_unitary_queer(const GroupSpec& g, const Weight& lambda) {
  ClassificationReport r = base_report(g, lambda);
  const FormData fd = form_data(g, lambda);
  const bool fixed = star_involution(g, lambda) == lambda;  // anti-palindromic weight

  r.d_lambda = fd.d;
  r.delta_lambda = fd.delta;
  r.pi_self_iso = fd.d % 2 == 1;
  r.super_quasi_rational = fixed;
  r.quasi_rational = fixed;
  r.epsilon = Sign::plus;
  if (fixed) {
    r.a_component = Determined<SquareClass>::of(SquareClass::one(g.base_field()));
    r.d_component = Determined<BrauerClass>::of(BrauerClass::trivial(g.base_field()));
    r.endo_name = Determined<std::string>::of("R");
    r.center_even_field = CenterField::base;
    r.absolutely_irreducible =
        absolute_irreducibility(true, r.epsilon, r.a_component, r.d_component);
    r.branch = "indefinite unitary queer: anti-palindromic weight, conjugation-stable "
               "isotropic subspace";
  } else {
    r.a_component = Determined<SquareClass>::undetermined(
        "not super quasi-rational: no (epsilon,a,D) coordinates");
    r.d_component = Determined<BrauerClass>::undetermined(
        "not super quasi-rational: no (epsilon,a,D) coordinates");
    r.endo_name = Determined<std::string>::of(fd.d % 2 == 0 ? "C" : "C[e]/(e^2-1)");
    r.center_even_field = CenterField::quadratic_extension;
    r.absolutely_irreducible = Ternary::no;
    r.branch = "indefinite unitary queer: conjugate pair of weights";
  }
  return r;
}

}  // namespace

ClassificationReport classify(const GroupSpec& g, const Weight& lambda) {
  const XflatVerdict verdict = xflat_verdict(g, lambda);
  if (verdict == XflatVerdict::nonmember) {
    throw std::invalid_argument("weight " + weight_str(lambda) +
                                " is not a dominant parameter for " + g.str());
  }

  ClassificationReport r = base_report(g, lambda);
  switch (g.family()) {
    case Family::split_queer:
      r = classify_split(g, lambda);
      break;
    case Family::quaternion_queer:
      r = classify_quaternion_queer(g, lambda);
      break;
    case Family::unitary_queer:
      r = classify_unitary_queer(g, lambda);
      break;
    case Family::unitary:
    case Family::zero_queer:
      r = has_twist_chain(g) ? classify_twist_chain(g, lambda) : classify_h1_zero(g, lambda);
      break;
    default:
      r = classify_h1_zero(g, lambda);
      break;
  }
  r.in_xflat = verdict;
  return r;
}

BWClass split_route_class(const GroupSpec& g, const Weight& lambda) {
  if (g.family() != Family::split_queer) {
    throw std::invalid_argument("split route applies to split queer groups only");
  }
  Weight negated(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) negated[i] = -lambda[i];
  return semisimple_wall_class(q_lambda_form(g, negated));
}

namespace {

BWClass real_sign_count_class(const FieldDescriptor& field, int n_plus, int n_minus) {
  const int d = n_plus + n_minus;
  const Sign eps = sign_pow_minus(d);
  int a_exp = binomial_parity(d, 2) + n_plus;
  SquareClass a = a_exp % 2 ? SquareClass::nonsquare(field) : SquareClass::one(field);
  int d_exp = binomial_parity(n_plus, 2) + binomial_parity(d + 1, 4);
  if (d >= 1) d_exp += n_plus * binomial_parity(d - 1, 2);
  BrauerClass D = BrauerClass::from_rep(field, d_exp % 2 ? -1 : 1);
  return BWClass{eps, a, D};
}

}  // namespace

BWClass split_closed_form_class(const GroupSpec& g, const Weight& lambda) {
  if (g.family() != Family::split_queer) {
    throw std::invalid_argument("closed form applies to split queer groups only");
  }
  const FieldDescriptor& field = g.base_field();
  if (field.is_real()) {
    int n_plus = 0, n_minus = 0;
    for (std::int64_t v : lambda) {
      if (v > 0) ++n_plus;
      if (v < 0) ++n_minus;
    }
    return real_sign_count_class(field, n_plus, n_minus);
  }
  const std::int64_t p = field.prime();
  int d = 0;
  SquareClass a = SquareClass::one(field);
  for (std::int64_t v : lambda) {
    if (v % p != 0) {
      ++d;
      a = a * square_class(field, v);
    }
  }
  if (binomial_parity(d + 1, 2)) a = a.negated();
  return BWClass{sign_pow_minus(d), a, BrauerClass::trivial(field)};
}

BWClass quaternion_queer_closed_form_class(const GroupSpec& g, const Weight& lambda) {
  if (g.family() != Family::quaternion_queer) {
    throw std::invalid_argument("closed form applies to the quaternion queer family only");
  }
  if (static_cast<int>(lambda.size()) != g.lattice_rank()) {
    throw std::invalid_argument("weight length mismatch");
  }
  const FieldDescriptor& field = g.base_field();
  int n_plus = 0, n_minus = 0;
  std::int64_t total = 0;
  for (std::int64_t v : lambda) {
    if (v > 0) ++n_plus;
    if (v < 0) ++n_minus;
    total += v;
  }
  BWClass out = real_sign_count_class(field, n_plus, n_minus);
  if (((total % 2) + 2) % 2 == 1) {
    out.d = brauer_mul(out.d, BrauerClass::from_rep(field, -1));
  }
  return out;
}

}  // namespace superbw
