#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superbw/quadratic_forms.hpp"

namespace superbw {

// Catalog of supported group families. The CLI tokens in parentheses are the
// external names.
enum class Family {
  split_queer,                // q:n (optionally @Fp:p)
  unitary_queer,              // qpq:p,q
  quaternion_queer,           // qstar:2n
  unitary,                    // u:p,q,r,s
  zero_queer,                 // zeroq:n
  periplectic,                // p:n
  quaternion_gl,              // ustar:2m,2n
  quaternion_periplectic,     // pstar:2n
  orthosymplectic,            // spo:2n,p,q
  quaternion_orthosymplectic  // spostar:p,q,2r
};

// A catalog entry: family tag, integer parameters, base field, and the
// derived lattice/odd-Cartan data.
class GroupSpec {
 public:
  GroupSpec(Family family, std::vector<int> params, FieldDescriptor base_field);

  Family family() const { return family_; }
  const std::vector<int>& params() const { return params_; }
  const FieldDescriptor& base_field() const { return field_; }

  int lattice_rank() const;  // N: length of weights
  int h1_dim() const;        // dim of the odd Cartan part
  bool basic_main_type() const;

  // "q:4", "q:4@Fp:5", "u:1,0,1,0", ...
  std::string str() const;
  static GroupSpec parse(std::string_view token);

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  Family family_;
  std::vector<int> params_;
  FieldDescriptor field_;
};

using Weight = std::vector<std::int64_t>;

std::string weight_str(const Weight& w);
Weight parse_weight(std::string_view text);

// Label of a BPS positive system for gl-type data; symbols are 'e' and 'd'.
struct EpsDeltaSequence {
  std::string symbols;
  friend bool operator==(const EpsDeltaSequence&, const EpsDeltaSequence&) = default;
};

// The twisted Galois action sigma * lambda = w_sigma^{-1} sigma(lambda) in the
// per-family closed form. Over F_p (split catalog entries only) the Galois
// group is trivial and the action is the identity.
Weight star_involution(const GroupSpec& g, const Weight& lambda);

enum class AssumptionKind { yes, no, conditional };
struct AssumptionVerdict {
  AssumptionKind kind;
  std::string note;  // set for conditional verdicts
  bool satisfied() const { return kind != AssumptionKind::no; }
};

// Whether a Galois-stable BPS positive system exists for the real form.
AssumptionVerdict assumption_holds(const GroupSpec& g);

enum class XflatVerdict { member, nonmember, unknown };
const char* xflat_str(XflatVerdict v);

// Dominance verdict for the highest-weight parameterization. Families whose
// full description is not in the catalog get a necessary even-part dominance
// check and report unknown when it passes.
XflatVerdict xflat_verdict(const GroupSpec& g, const Weight& lambda);

// The form q^lambda on the odd Cartan part: diag(lambda) for the queer
// families, the empty form when h1_dim = 0.
DiagonalQuadraticForm q_lambda_form(const GroupSpec& g, const Weight& lambda);

// Supertrace pairing data for a gl(m|n)-type root datum: (e_i, e_i) = +1 on
// the even block, -1 on the odd block.
struct BlockSignature {
  int even_dim;
  int odd_dim;
};

std::int64_t block_pairing(const Weight& x, const Weight& y, const BlockSignature& sig);

// One odd reflection: if (lambda, alpha) = 0 the weight is fixed, otherwise it
// moves to lambda - alpha with a parity flip. alpha must be isotropic.
std::pair<Weight, bool> odd_reflection_step(const Weight& lambda, const Weight& alpha,
                                            const BlockSignature& sig);

struct TwistStep {
  Weight root;
  bool applied;
};

struct TwistResult {
  Weight final_weight;
  int parity_flips = 0;  // |I(lambda, sigma)|; only the parity is contractual
  std::vector<TwistStep> chain;
};

// Runs the catalog odd-reflection chain from w_sigma^{-1} sigma(lambda):
// a single root for unitary odd|odd blocks, the chain e_i - e_{n+i} for
// zeroq:n. Other families have no catalog chain and are rejected.
bool has_twist_chain(const GroupSpec& g);
TwistResult galois_twist_chain(const GroupSpec& g, const Weight& lambda);

// Galois action on eps-delta sequences: reversal for the unitary family,
// pointwise swap for zeroq.
EpsDeltaSequence epsdelta_galois(const GroupSpec& g, const EpsDeltaSequence& s);

}  // namespace superbw
