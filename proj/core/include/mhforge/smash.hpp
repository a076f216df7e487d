#pragma once

#include <optional>
#include <string>

#include "mhforge/actions.hpp"
#include "mhforge/twist.hpp"

namespace mhf {

// Smash-type products, all realized as twisted tensor products.  `module`
// carries the actions on A, `comodule` the coactions on B.
//   Right:         B#A,  (b'#a')(b#a) = b'b0 # (a'◁b(1))a
//   Left:          A#B,  (a#b)(a'#b') = a(b(-1)▷a') # b0b'
//   FRight/FLeft:  as above with f(b(1)) / f(b(-1)), f: L → Q a bialgebra map
//   TwistedRight:  B⋆A,  (b'⋆a')(b⋆a) = b'b0 ⋆ (S⁻¹(b(-1))▷a'◁b(1))a
//   TwistedLeft:   A⋆B,  (a⋆b)(a'⋆b') = a(b(-1)▷a'◁S⁻¹(b(1))) ⋆ b0b'
//   LrRight:       B◇A,  (b'◇a')(b◇a) = b'0b0 ◇ (a'◁b(1))(b'(-1)▷a)
//   LrLeft:        A◇B,  (a◇b)(a'◇b') = (a◁b'(1))(b(-1)▷a') ◇ b0b'0
enum class SmashVariant { Right, Left, FRight, FLeft, TwistedRight, TwistedLeft, LrRight, LrLeft };

const char* variant_name(SmashVariant v);
SmashVariant variant_from_name(const std::string& name);  // throws InputError
bool is_right_variant(SmashVariant v);

struct SmashSpec {
    SmashVariant variant = SmashVariant::Right;
    ActionPack module;
    ActionPack comodule;
    std::optional<LinearMap> f;  // L → Q
};

// The twist maps for the variant.  Certifications are not checked here.
TwistPair smash_twist(const SmashSpec& spec);
// Certifies what the variant needs (running certify_pack when a flag is
// missing), then builds and re-checks the product.  Throws InputError when a
// required certification fails.
TwistedProduct build_smash(SmashSpec spec);

// f(xy) = f(x)f(y), f(1) = 1, Δf = (f⊗f)Δ, εf = ε.
Verdict check_bialgebra_map(const LinearMap& f, const Hopf& from, const Hopf& to);

// Bijective + multiplicative on all basis pairs, and a two-sided inverse
// when one is given.  The summary condition carries `id`.
Verdict check_algebra_iso(const std::string& id, const LinearMap& phi, const Algebra& src, const Algebra& tgt,
                          const std::optional<LinearMap>& inverse = std::nullopt);

struct SmashIso {
    TwistedProduct source;
    TwistedProduct target;
    LinearMap map;
    LinearMap inverse;
    Verdict verdict;
};

// A carries a left Q-coaction Γ (and optionally Υ, which must equal
// (id⊗S⁻¹)τΓ).  Builds A#_l Q̂^cop and Q̂#_r A from the dual actions and
// certifies f(a#x̂) = Σ x̂1#(a◁x̂2) with inverse f⁻¹(x̂#a) = Σ (x̂(2)▷a)#x̂(1).
SmashIso iso_smash_duality(const Pairing& pairing, const ActionPack& pack);

// Φ: B⋆A → B◇A, b⋆a ↦ b0◇(b(-1)▷a), Ψ: b◇a ↦ b0⋆(S⁻¹(b(-1))▷a); on the
// left Φ: a⋆b ↦ (a◁b(1))◇b0, Ψ: a◇b ↦ (a◁S⁻¹(b(1)))⋆b0.
// `right` picks the side.
SmashIso iso_lr_vs_twisted(const ActionPack& module, const ActionPack& comodule, bool right);

// (x1▷c)(-1)x2y ⊗ (x1▷c)0 = x1c(-1)y ⊗ x2▷c0 on all basis (c, x, y).
Verdict check_yetter_drinfeld(const ActionPack& pack);

// A#_l C as a Q-bimodule algebra: x▷(a#c) = x1▷a#x2▷c, (a#c)◁x = (a◁x)#c.
ActionPack smash_bimodule_pack(const TwistedProduct& ac, const ActionPack& a, const ActionPack& c);
// C#_l B as a Q-bicomodule algebra: Γ(c#b) = c(-1)b(-1)⊗(c0#b0), Υ(c#b) = (c#b0)⊗b(1).
ActionPack smash_bicomodule_pack(const TwistedProduct& cb, const ActionPack& c, const ActionPack& b);

// (A#_l C)◇_l B = A◇_l (C#_l B) as structure constants on A⊗C⊗B.
struct MixedAssociativity {
    TwistedProduct outer_left;   // (A#C)◇B
    TwistedProduct outer_right;  // A◇(C#B)
    Verdict verdict;
};
MixedAssociativity iso_mixed_assoc(const ActionPack& a, const ActionPack& c, const ActionPack& b);
// (C#_l A)#_l B = C#_l (A#_l B) for a left module algebra C and a
// Yetter–Drinfeld algebra A.
MixedAssociativity iso_iterated_smash(const ActionPack& c, const ActionPack& a, const ActionPack& b);

// Invertible R in Q⊗Q, stored as elements.
struct DrinfeldTwist {
    Hopf q;
    SparseVec r;
    SparseVec r_inv;

    // Computes the inverse; throws MathError when R is singular.
    static DrinfeldTwist from_element(const Hopf& q, const SparseVec& r);
    static DrinfeldTwist trivial(const Hopf& q);
};

Verdict check_drinfeld_twist(const DrinfeldTwist& dt);

// How the gauge display is read:
//   Conjugate:     R^x = (x⊗x) R Δ(x)⁻¹
//   RightDiagonal: R^x = R Δ(x) (x⁻¹⊗x⁻¹)
enum class Gauge { Conjugate, RightDiagonal };
DrinfeldTwist gauge_transform(const DrinfeldTwist& dt, const SparseVec& x, Gauge convention);

// Q_R: Δ_R = RΔR⁻¹, S_R = T_R S T_R⁻¹ with T_R = R¹S(R²), T_R⁻¹ = S(R⁻¹)R⁻².
struct DeformedHopf {
    Hopf hopf;
    SparseVec t_r;
    SparseVec t_r_inv;
    Verdict verdict;
};
DeformedHopf deform_hopf(const DrinfeldTwist& dt);

// _{R⁻¹}A_R: a∘b = (R⁻¹▷a◁R¹)(R⁻²▷b◁R²), same actions, now over Q_R.
struct DeformedPack {
    ActionPack pack;
    Verdict verdict;
};
DeformedPack deform_module_algebra(const ActionPack& a, const DrinfeldTwist& dt, const Hopf& q_r);
// ^{R⁻¹}B^R: same algebra and coactions, re-certified over Q_R.
DeformedPack deform_bicomodule(const ActionPack& b, const DrinfeldTwist& dt, const Hopf& q_r);

// Identity B◇A = ^{R⁻¹}B^R ◇ _{R⁻¹}A_R (or the left version), and the ⋆
// version B⋆A ≅ ^{R⁻¹}B^R ◇ _{R⁻¹}A_R through Φ.
struct TwistInvariance {
    TwistedProduct original;
    TwistedProduct deformed;
    Verdict verdict;
};
TwistInvariance iso_twist_invariance(const ActionPack& a, const ActionPack& b, const DrinfeldTwist& dt, bool right);

// D(Q) realized as Q̂⋆Q^cop and as Q̂◇Q^cop, with the Φ-transport between them.
struct DrinfeldDouble {
    ActionPack module;    // Q^cop with the dual actions of Q̂
    ActionPack comodule;  // Q̂ coacting on itself
    TwistedProduct twisted;
    TwistedProduct lr;
    LinearMap phi;
    Verdict verdict;
};
DrinfeldDouble build_drinfeld_double(const Pairing& pairing);

// Dimension of the center, as the kernel of x ↦ (x e_j - e_j x)_j.
Index center_dimension(const Algebra& a);

}  // namespace mhf
