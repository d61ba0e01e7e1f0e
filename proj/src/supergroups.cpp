#include "superbw/supergroups.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace superbw {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<std::int64_t> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::int64_t value = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    if (!item.empty() && item.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || item.empty()) {
      throw std::invalid_argument("bad integer '" + std::string(item) + "' in " + std::string(what));
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Sign pattern of the *-involution on orthosymplectic weights: trivial when a
// compact-torus or trivial-action criterion applies, otherwise the last
// coordinate flips.
bool spo_negates_last(int p, int q) {
  if ((p + q) % 2 == 1) return false;
  if (p % 2 == 0 && q % 2 == 0) return (p + q) % 4 != 0;
  return (p + q) % 4 != 2;  // p, q both odd
}

}  // namespace

GroupSpec::GroupSpec(Family family, std::vector<int> params, FieldDescriptor base_field)
    : family_(family), params_(std::move(params)), field_(base_field) {
  for (int v : params_) require(v >= 0, "group parameters must be nonnegative");
  const auto arity = [&](std::size_t n) {
    require(params_.size() == n, "wrong number of parameters for group family");
  };
  const auto even_param = [&](std::size_t i, const char* name) {
    require(params_[i] % 2 == 0, std::string(name) + " parameter must be even");
  };
  switch (family_) {
    case Family::split_queer:
      arity(1);
      break;
    case Family::unitary_queer:
      arity(2);
      break;
    case Family::quaternion_queer:
      arity(1);
      even_param(0, "qstar");
      break;
    case Family::unitary:
      arity(4);
      break;
    case Family::zero_queer:
    case Family::periplectic:
      arity(1);
      break;
    case Family::quaternion_gl:
      arity(2);
      even_param(0, "ustar");
      even_param(1, "ustar");
      break;
    case Family::quaternion_periplectic:
      arity(1);
      even_param(0, "pstar");
      break;
    case Family::orthosymplectic:
      arity(3);
      even_param(0, "spo even-part");
      break;
    case Family::quaternion_orthosymplectic:
      arity(3);
      even_param(2, "spostar odd-part");
      break;
  }
  if (family_ != Family::split_queer) {
    require(field_.is_real(), "only the split queer family is defined over finite fields");
  }
}

int GroupSpec::lattice_rank() const {
  switch (family_) {
    case Family::split_queer:
      return params_[0];
    case Family::unitary_queer:
      return params_[0] + params_[1];
    case Family::quaternion_queer:
      return params_[0];
    case Family::unitary:
      return params_[0] + params_[1] + params_[2] + params_[3];
    case Family::zero_queer:
    case Family::periplectic:
      return 2 * params_[0];
    case Family::quaternion_gl:
      return params_[0] + params_[1];
    case Family::quaternion_periplectic:
      return params_[0];
    case Family::orthosymplectic:
      return params_[0] / 2 + (params_[1] + params_[2]) / 2;
    case Family::quaternion_orthosymplectic:
      return params_[0] + params_[1] + params_[2] / 2;
  }
  return 0;
}

int GroupSpec::h1_dim() const {
  switch (family_) {
    case Family::split_queer:
    case Family::unitary_queer:
    case Family::quaternion_queer:
      return lattice_rank();
    default:
      return 0;
  }
}

bool GroupSpec::basic_main_type() const {
  switch (family_) {
    case Family::unitary:
    case Family::zero_queer:
    case Family::periplectic:
    case Family::quaternion_gl:
    case Family::orthosymplectic:
    case Family::quaternion_orthosymplectic:
      return true;
    default:
      return false;
  }
}

std::string GroupSpec::str() const {
  std::string head;
  switch (family_) {
    case Family::split_queer: head = "q"; break;
    case Family::unitary_queer: head = "qpq"; break;
    case Family::quaternion_queer: head = "qstar"; break;
    case Family::unitary: head = "u"; break;
    case Family::zero_queer: head = "zeroq"; break;
    case Family::periplectic: head = "p"; break;
    case Family::quaternion_gl: head = "ustar"; break;
    case Family::quaternion_periplectic: head = "pstar"; break;
    case Family::orthosymplectic: head = "spo"; break;
    case Family::quaternion_orthosymplectic: head = "spostar"; break;
  }
  head += ":";
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (i) head += ",";
    head += std::to_string(params_[i]);
  }
  if (field_.is_finite()) head += "@" + field_.str();
  return head;
}

GroupSpec GroupSpec::parse(std::string_view token) {
  FieldDescriptor field = FieldDescriptor::real();
  std::string_view body = token;
  if (std::size_t at = token.find('@'); at != std::string_view::npos) {
    field = FieldDescriptor::parse(token.substr(at + 1));
    body = token.substr(0, at);
  }
  const std::size_t colon = body.find(':');
  require(colon != std::string_view::npos, "bad group spec '" + std::string(token) + "'");
  const std::string_view head = body.substr(0, colon);
  const auto ints = parse_int_list(body.substr(colon + 1), "group spec");
  std::vector<int> params;
  for (std::int64_t v : ints) {
    require(v >= 0 && v <= 1 << 20, "group parameter out of range");
    params.push_back(static_cast<int>(v));
  }

  Family family;
  if (head == "q") family = Family::split_queer;
  else if (head == "qpq") family = Family::unitary_queer;
  else if (head == "qstar") family = Family::quaternion_queer;
  else if (head == "u") family = Family::unitary;
  else if (head == "zeroq") family = Family::zero_queer;
  else if (head == "p") family = Family::periplectic;
  else if (head == "ustar") family = Family::quaternion_gl;
  else if (head == "pstar") family = Family::quaternion_periplectic;
  else if (head == "spo") family = Family::orthosymplectic;
  else if (head == "spostar") family = Family::quaternion_orthosymplectic;
  else throw std::invalid_argument("unknown group family '" + std::string(head) + "'");

  if (family != Family::split_queer && field.is_finite()) {
    throw std::invalid_argument("group '" + std::string(head) + "' is only defined over R");
  }
  return GroupSpec(family, std::move(params), field);
}

std::string weight_str(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + ")";
}

Weight parse_weight(std::string_view text) { return parse_int_list(text, "weight"); }

namespace {

void check_weight(const GroupSpec& g, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != g.lattice_rank()) {
    throw std::invalid_argument("weight length " + std::to_string(lambda.size()) +
                                " does not match lattice rank " +
                                std::to_string(g.lattice_rank()) + " of " + g.str());
  }
}

Weight negate_reverse(const Weight& w) {
  Weight out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = -w[w.size() - 1 - i];
  return out;
}

}  // namespace

Weight star_involution(const GroupSpec& g, const Weight& lambda) {
  check_weight(g, lambda);
  const int n = g.lattice_rank();
  switch (g.family()) {
    case Family::split_queer:
    case Family::quaternion_queer:
    case Family::quaternion_gl:
    case Family::quaternion_periplectic:
      return lambda;
    case Family::unitary_queer:
      return negate_reverse(lambda);
    case Family::unitary: {
      const int even = g.params()[0] + g.params()[1];
      Weight out(n);
      for (int i = 0; i < even; ++i) out[i] = -lambda[even - 1 - i];
      for (int i = even; i < n; ++i) out[i] = -lambda[even + n - 1 - i];
      return out;
    }
    case Family::periplectic: {
      const int half = n / 2;
      Weight out(n);
      for (int i = 0; i < half; ++i) {
        out[i] = -lambda[half + i];
        out[half + i] = -lambda[i];
      }
      return out;
    }
    case Family::zero_queer: {
      const int half = n / 2;
      Weight out(n);
      for (int i = 0; i < half; ++i) {
        out[i] = lambda[half + i];
        out[half + i] = lambda[i];
      }
      return out;
    }
    case Family::orthosymplectic: {
      Weight out = lambda;
      if (spo_negates_last(g.params()[1], g.params()[2]) && n > 0) out.back() = -out.back();
      return out;
    }
    case Family::quaternion_orthosymplectic: {
      Weight out = lambda;
      const int r = g.params()[2] / 2;
      if (r % 2 == 1 && n > 0) out.back() = -out.back();
      return out;
    }
  }
  throw std::logic_error("unhandled family in star_involution");
}

AssumptionVerdict assumption_holds(const GroupSpec& g) {
  switch (g.family()) {
    case Family::unitary: {
      const int even = g.params()[0] + g.params()[1];
      const int odd = g.params()[2] + g.params()[3];
      if ((even % 2) * (odd % 2) == 1) return {AssumptionKind::no, {}};
      return {AssumptionKind::yes, {}};
    }
    case Family::zero_queer:
      return g.params()[0] == 0 ? AssumptionVerdict{AssumptionKind::yes, {}}
                                : AssumptionVerdict{AssumptionKind::no, {}};
    case Family::orthosymplectic:
      if (spo_negates_last(g.params()[1], g.params()[2])) {
        return {AssumptionKind::conditional,
                "holds for the positive systems whose eps-delta sequence has no delta at the "
                "right end"};
      }
      return {AssumptionKind::yes, {}};
    default:
      return {AssumptionKind::yes, {}};
  }
}

const char* xflat_str(XflatVerdict v) {
  switch (v) {
    case XflatVerdict::member: return "member";
    case XflatVerdict::nonmember: return "nonmember";
    default: return "unknown";
  }
}

namespace {

// Weakly decreasing, with stationary values forced to vanish (mod p when the
// characteristic is positive).
bool decreasing_unstationary(const std::vector<std::int64_t>& v, std::int64_t characteristic) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] < v[i + 1]) return false;
    if (v[i] == v[i + 1]) {
      const bool vanishes = characteristic == 0 ? v[i] == 0 : v[i] % characteristic == 0;
      if (!vanishes) return false;
    }
  }
  return true;
}

bool weakly_decreasing(const std::vector<std::int64_t>& v) {
  return std::is_sorted(v.rbegin(), v.rend());
}

bool weakly_increasing(const std::vector<std::int64_t>& v) {
  return std::is_sorted(v.begin(), v.end());
}

std::vector<std::int64_t> slice(const Weight& w, int begin, int end) {
  return {w.begin() + begin, w.begin() + end};
}

// Dominance for the symplectic / odd orthogonal block: decreasing with a
// nonnegative tail.
bool bc_type_dominant(const std::vector<std::int64_t>& v) {
  return weakly_decreasing(v) && (v.empty() || v.back() >= 0);
}

// Dominance for the even orthogonal block: decreasing among the first k-1
// entries with mu_{k-1} >= |mu_k|.
bool d_type_dominant(const std::vector<std::int64_t>& v) {
  if (v.size() < 2) return true;
  auto head = std::vector<std::int64_t>(v.begin(), v.end() - 1);
  if (!weakly_decreasing(head)) return false;
  const std::int64_t last = v.back();
  return head.back() >= (last < 0 ? -last : last);
}

}  // namespace

XflatVerdict xflat_verdict(const GroupSpec& g, const Weight& lambda) {
  check_weight(g, lambda);
  const int n = g.lattice_rank();
  switch (g.family()) {
    case Family::split_queer: {
      const std::int64_t p = g.base_field().is_finite() ? g.base_field().prime() : 0;
      return decreasing_unstationary(lambda, p) ? XflatVerdict::member : XflatVerdict::nonmember;
    }
    case Family::quaternion_queer: {
      const int half = n / 2;
      std::vector<std::int64_t> chain = slice(lambda, 0, half);
      for (int i = n - 1; i >= half; --i) chain.push_back(lambda[i]);
      return decreasing_unstationary(chain, 0) ? XflatVerdict::member : XflatVerdict::nonmember;
    }
    case Family::zero_queer:
      return XflatVerdict::member;
    case Family::unitary_queer:
      return weakly_decreasing(lambda) ? XflatVerdict::unknown : XflatVerdict::nonmember;
    case Family::unitary: {
      const int even = g.params()[0] + g.params()[1];
      const bool ok =
          weakly_decreasing(slice(lambda, 0, even)) && weakly_decreasing(slice(lambda, even, n));
      return ok ? XflatVerdict::unknown : XflatVerdict::nonmember;
    }
    case Family::periplectic: {
      const int half = n / 2;
      const bool ok =
          weakly_decreasing(slice(lambda, 0, half)) && weakly_increasing(slice(lambda, half, n));
      return ok ? XflatVerdict::unknown : XflatVerdict::nonmember;
    }
    case Family::quaternion_gl: {
      const int first = g.params()[0];
      const bool ok =
          weakly_decreasing(slice(lambda, 0, first)) && weakly_decreasing(slice(lambda, first, n));
      return ok ? XflatVerdict::unknown : XflatVerdict::nonmember;
    }
    case Family::quaternion_periplectic:
      return weakly_decreasing(lambda) ? XflatVerdict::unknown : XflatVerdict::nonmember;
    case Family::orthosymplectic: {
      const int sp = g.params()[0] / 2;
      const bool odd_orth = (g.params()[1] + g.params()[2]) % 2 == 1;
      const bool ok = bc_type_dominant(slice(lambda, 0, sp)) &&
                      (odd_orth ? bc_type_dominant(slice(lambda, sp, n))
                                : d_type_dominant(slice(lambda, sp, n)));
      return ok ? XflatVerdict::unknown : XflatVerdict::nonmember;
    }
    case Family::quaternion_orthosymplectic: {
      const int sp = g.params()[0] + g.params()[1];
      const bool ok =
          bc_type_dominant(slice(lambda, 0, sp)) && d_type_dominant(slice(lambda, sp, n));
      return ok ? XflatVerdict::unknown : XflatVerdict::nonmember;
    }
  }
  return XflatVerdict::unknown;
}

DiagonalQuadraticForm q_lambda_form(const GroupSpec& g, const Weight& lambda) {
  check_weight(g, lambda);
  if (g.h1_dim() == 0) return DiagonalQuadraticForm{g.base_field(), {}};
  return DiagonalQuadraticForm::from_integers(g.base_field(), lambda);
}

std::int64_t block_pairing(const Weight& x, const Weight& y, const BlockSignature& sig) {
  const std::size_t n = static_cast<std::size_t>(sig.even_dim + sig.odd_dim);
  if (x.size() != n || y.size() != n) {
    throw std::invalid_argument("pairing length does not match the block signature");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t s = i < static_cast<std::size_t>(sig.even_dim) ? 1 : -1;
    total += x[i] * y[i] * s;
  }
  return total;
}

std::pair<Weight, bool> odd_reflection_step(const Weight& lambda, const Weight& alpha,
                                            const BlockSignature& sig) {
  if (block_pairing(alpha, alpha, sig) != 0) {
    throw std::invalid_argument("odd reflection root is not isotropic");
  }
  if (block_pairing(lambda, alpha, sig) == 0) return {lambda, false};
  Weight moved(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) moved[i] = lambda[i] - alpha[i];
  return {moved, true};
}

bool has_twist_chain(const GroupSpec& g) {
  if (g.family() == Family::zero_queer) return g.params()[0] >= 1;
  if (g.family() == Family::unitary) {
    const int even = g.params()[0] + g.params()[1];
    const int odd = g.params()[2] + g.params()[3];
    return (even % 2) * (odd % 2) == 1;
  }
  return false;
}

TwistResult galois_twist_chain(const GroupSpec& g, const Weight& lambda) {
  check_weight(g, lambda);
  if (!has_twist_chain(g)) {
    throw std::invalid_argument("no catalog odd-reflection chain for " + g.str());
  }

  BlockSignature sig{0, 0};
  std::vector<Weight> roots;
  const int rank = g.lattice_rank();
  if (g.family() == Family::zero_queer) {
    const int half = g.params()[0];
    sig = {half, half};
    for (int i = 0; i < half; ++i) {
      Weight alpha(rank, 0);
      alpha[i] = 1;
      alpha[half + i] = -1;
      roots.push_back(std::move(alpha));
    }
  } else {
    const int even = g.params()[0] + g.params()[1];
    const int odd = g.params()[2] + g.params()[3];
    sig = {even, odd};
    const int m = (even - 1) / 2;
    const int half_odd = (odd - 1) / 2;
    Weight alpha(rank, 0);
    alpha[m] = 1;
    alpha[even + half_odd] = -1;
    roots.push_back(std::move(alpha));
  }

  TwistResult result;
  result.final_weight = star_involution(g, lambda);
  for (const Weight& alpha : roots) {
    auto [next, applied] = odd_reflection_step(result.final_weight, alpha, sig);
    result.chain.push_back({alpha, applied});
    result.final_weight = std::move(next);
    if (applied) ++result.parity_flips;
  }
  return result;
}

EpsDeltaSequence epsdelta_galois(const GroupSpec& g, const EpsDeltaSequence& s) {
  for (char c : s.symbols) {
    if (c != 'e' && c != 'd') {
      throw std::invalid_argument("eps-delta sequences are strings over {e, d}");
    }
  }
  if (g.family() == Family::unitary) {
    EpsDeltaSequence out = s;
    std::reverse(out.symbols.begin(), out.symbols.end());
    return out;
  }
  if (g.family() == Family::zero_queer) {
    EpsDeltaSequence out = s;
    for (char& c : out.symbols) c = (c == 'e') ? 'd' : 'e';
    return out;
  }
  throw std::invalid_argument("no eps-delta sequence semantics for " + g.str());
}

}  // namespace superbw
