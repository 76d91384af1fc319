#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtcalc/cat.hpp"
#include "rtcalc/tangle.hpp"

namespace rtcalc {

/// Module carried by a strand end: the color, or its dual on a down strand.
ModulePtr strand_module(const TangleDiagram& d, const StrandEnd& e);

/// Tensor product of the strand modules of a state (the unit when empty).
ModulePtr state_module(const TangleDiagram& d, const StrandState& s);

/// F(d): sweeps the slices bottom to top, applying each piece in place on the
/// running state.
Morphism eval_diagram(const TangleDiagram& d);

/// F(d) built independently: every slice becomes a full tensor_mor product
/// and slices are composed top down with compose(). Slow; used as an oracle.
Morphism eval_diagram_bruteforce(const TangleDiagram& d);

/// <ev_hat o coev> for a color.
cplx qdim(const GlobalParams& p, const ModuleLabel& v);

/// Closed form S'(beta, alpha): the Hopf loop colored beta around an open
/// V_alpha strand. The alpha in rZ branch is used within 1e-6 of rZ.
cplx s_prime(const GlobalParams& p, cplx beta, cplx alpha);

/// The same quantity from the engine: <F(close_braid([1,1], keep 1))>.
cplx s_prime_engine(const GlobalParams& p, cplx beta, cplx alpha);

/// d_eta(alpha) = S'(alpha, eta) / S'(eta, alpha). Throws domain_error when
/// alpha or eta lies within the guard of Z.
cplx mod_qdim(const GlobalParams& p, cplx eta, cplx alpha, double guard = Tolerances{}.guard);

/// d_eta(alpha) / d_eta'(alpha) computed from the definition:
/// sin(pi eta) sin(pi eta'/r) / (sin(pi eta/r) sin(pi eta')).
cplx eta_ratio(const GlobalParams& p, cplx eta, cplx eta_prime);

/// The reference form sin(pi eta/r) sin(pi eta') / (sin(pi eta) sin(pi eta'/r)).
cplx eta_ratio_reference(const GlobalParams& p, cplx eta, cplx eta_prime);

struct InvariantResult {
  cplx value;
  cplx eta;
  ModuleLabel cut_color = ModuleLabel::unit();
  std::string cut_id;  // color id of the cut component
  int cut_component = 0;
  double scalar_residual = 0;
  std::string diagram_hash;  // FNV-1a of the serialized diagram
  int r = 2;
};

/// The (1,1)-tangle obtained by cutting component `component` of the closure
/// of a braid tangle.
TangleDiagram cut_braid(const TangleDiagram& braid, int component);

/// Indices of components whose color is a Verma module passing the guard.
std::vector<int> admissible_components(const TangleDiagram& braid, double guard = Tolerances{}.guard);

/// F'_eta. `d` is either a braid tangle (its closure is the link; `cut`
/// picks a component, default the first admissible one) or a (1,1)-tangle
/// whose open strand is the cut.
InvariantResult renormalized(const TangleDiagram& d, cplx eta, std::optional<int> cut = std::nullopt,
                             const Tolerances& tol = {});

/// <theta_V> measured by the engine.
cplx twist_scalar(const GlobalParams& p, const ModuleLabel& v);

/// theta^{-wr} F'_eta for a link whose components all carry one Verma color.
/// wr counts crossings and framing twists.
cplx deframed(const TangleDiagram& d, cplx eta, const Tolerances& tol = {});

/// A (2,2)-tangle given by a braid whose strands 3..n are closed on the right.
struct TwoTwoTangle {
  TangleDiagram braid;    // the (n,n) braid tangle
  TangleDiagram diagram;  // strands 3..n closed
};

/// Random (2,2)-tangle: braid on 2..4 strands with at most 8 letters. Open
/// strands are colored `left` (bottom position 1) and `right` (position 2);
/// closed components draw from a palette of generic Verma colors. When the
/// open colors differ, the word is redrawn until strand 1 ends at position 1.
TwoTwoTangle random_two_two(const GlobalParams& p, const ModuleLabel& left, const ModuleLabel& right,
                            uint64_t seed);

struct AmbiReport {
  double deviation = 0;  // max |ptr_left - ptr_right| relative to max(1, |entries|)
  cplx left;
  cplx right;
};

/// Compares left and right closures of F(T) for a (2,2)-tangle with both
/// open strands colored V.
AmbiReport check_ambidextrous(const TwoTwoTangle& t);

struct CheckReport {
  double residual = 0;
  cplx lhs;
  cplx rhs;
};

/// d_eta(alpha) F'(a # b) against F'(a) F'(b), where both braid tangles carry
/// V_alpha on their joined components.
CheckReport connect_sum_check(const TangleDiagram& a, const TangleDiagram& b, cplx eta);

/// Highest-weight vector counts of V_eta x V_eta at weights 2 eta + 2i,
/// i = 0..r-1, plus the number of other weights carrying any. Throws
/// domain_error for eta in Z/2.
struct DecomposeReport {
  std::vector<int> counts;
  int stray = 0;
};
DecomposeReport decompose_check(const GlobalParams& p, cplx eta);

/// The open-trefoil sum q^{3/2 a^2 + a(1-r)} sum_i q^{i(-3 alpha - r + c_i)} prod_j {i-j-alpha},
/// a = alpha + r - 1, with c_i = 1 (cut example) or c_i = i (renormalized example).
enum class TrefoilVariant { cut_example, renormalized_example };
cplx trefoil_formula(const GlobalParams& p, cplx alpha, TrefoilVariant v);

/// The reference figure-eight triple sum divided by d_eta(alpha), read literally
/// with l = r - 1 - (i + k). Terms with a vanishing factorial denominator are
/// skipped and counted.
struct Figure8Formula {
  cplx value;
  int skipped_terms = 0;
};
Figure8Formula figure8_formula(const GlobalParams& p, cplx alpha);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& s);

}  // namespace rtcalc
