#pragma once

#include <optional>
#include <string>

#include "mhforge/hopf.hpp"

namespace mhf {

// A pair of twisting maps R: B⊗A → A⊗B and T: A⊗B → A⊗B.  Subscript
// notation: R(b⊗a) = a_R⊗b_R, T(a⊗b) = a_T⊗b_T.
struct TwistPair {
    std::string name;
    Algebra a;
    Algebra b;
    LinearMap r;
    LinearMap t;
    std::optional<LinearMap> r_inv;
    std::optional<LinearMap> t_inv;

    // R = τ, T = id.
    static TwistPair flip(const Algebra& a, const Algebra& b);
    // Stored inverse, else computed (throws SingularMap).
    LinearMap r_inverse() const;
    LinearMap t_inverse() const;
    // Fills both cached inverses; throws SingularMap when either is singular.
    TwistPair with_inverses() const;
};

// The product A#B: (a#x)(b#y) = a_T b_R # x_R y_T.
struct TwistedProduct {
    TwistPair pair;
    Algebra alg;
    std::optional<Hopf> hopf;
    Verdict verdict;
};

Verdict check_twist_axioms(const TwistPair& tp);
// (m_A⊗m_B) T₁₄ R₂₃ on (A⊗B)⊗(A⊗B).
LinearMap twisted_mul_map(const TwistPair& tp);
// Builds the product algebra, re-checks associativity exhaustively and
// installs 1⊗1 as unit when the unit conditions hold.
TwistedProduct build_twisted_product(const TwistPair& tp);

// R*T(a⊗x⊗b⊗y) = a_T b_R ⊗ (x y_T)_R with T on (a, y) and R on (x y_T, b);
// T*R(a⊗x⊗b⊗y) = (a_T b)_R ⊗ x_R y_T with T on (a, y) and R on (x, a_T b).
LinearMap star_rt(const TwistPair& tp);
LinearMap star_tr(const TwistPair& tp);

Verdict check_nondegeneracy_twisted(const TwistPair& tp);

// Unital Hopf factors.  Δ = (id⊗τ⊗id)(Δ_A⊗Δ_B), ε = ε_A⊗ε_B,
// S = T∘R∘(S_B⊗S_A)∘τ.
Verdict check_hopf_twist_conditions(const TwistPair& tp, const Hopf& ha, const Hopf& hb);
TwistedProduct build_hopf_twisted(const TwistPair& tp, const Hopf& ha, const Hopf& hb);

// Covers of the twisted coproduct built from the twist maps and the covers
// of A (B unital):  first = Δ(u)(1⊗v), second = (u⊗1)Δ(v).
struct CoverPair {
    LinearMap first;
    LinearMap second;
};
CoverPair coproduct_candidates(const TwistPair& tp, const Hopf& ha, const Hopf& hb);
// Interchange law, and agreement with the covers of `product` when it is unital.
Verdict check_coproduct_candidates(const TwistPair& tp, const Hopf& ha, const Hopf& hb, const Hopf& product);

// A possibly non-unital, B unital.  Hypotheses of the nondegeneracy
// criterion, the covered coproduct, counit and antipode conditions, then the
// full multiplier Hopf contract of the result.
TwistedProduct build_multiplier_hopf_twisted(const TwistPair& tp, const Hopf& ha, const Hopf& hb);

// Twist-compatible involutions; on success `product` gets (a#x)* = TR(x*⊗a*).
Verdict check_star_twisted(const TwistPair& tp, TwistedProduct& product);

// m#n = (m#1)(1#n) in M(A#B).
Multiplier extend_multiplier(const TwistPair& tp, const Algebra& product, const Multiplier& m, const Multiplier& n);
// Same on two legs: M ∈ M(A⊗A), N ∈ M(B⊗B) give M#N ∈ M((A#B)⊗(A#B)).
Multiplier extend_multiplier_pair(const TwistPair& tp, const Algebra& product_squared, const Multiplier& m,
                                  const Multiplier& n);
// Compatibility of m#n, and inner agreement for elements of unital factors.
Verdict check_extension(const TwistPair& tp, const Algebra& product);

struct TwistedIntegral {
    LinearMap functional;
    Condition certificate;
};
TwistedIntegral integral_twisted(const TwistedProduct& tp, const LinearMap& psi_a, const LinearMap& psi_b);

struct TwistedModular {
    Multiplier delta;
    Condition certificate;
};
// δ_A#δ_B for left integrals φ_A, φ_B, compared with the modular element of
// the product computed directly from φ_A⊗φ_B.
TwistedModular modular_twisted(const TwistedProduct& tp, const Hopf& ha, const Hopf& hb, const LinearMap& phi_a,
                               const LinearMap& phi_b);

}  // namespace mhf
