#pragma once

#include <optional>
#include <set>
#include <string>

#include "mhforge/hopf.hpp"

namespace mhf {

// Actions and coactions of Hopf objects on an algebra A.  Q acts / coacts
// on the left, L on the right.  Coactions are kept in covered form:
//   left:  A⊗Q → Q⊗A,  a⊗x ↦ Γ(a)(x⊗1) = Σ a(-1)x ⊗ a(0)
//   right: A⊗L → A⊗L,  a⊗x ↦ Υ(a)(1⊗x) = Σ a(0) ⊗ a(1)x
struct ActionPack {
    Algebra alg;
    std::optional<Hopf> left_hopf;
    std::optional<Hopf> right_hopf;
    std::optional<LinearMap> left_action;     // Q⊗A → A
    std::optional<LinearMap> right_action;    // A⊗L → A
    std::optional<LinearMap> left_coaction;   // covered, A⊗Q → Q⊗A
    std::optional<LinearMap> right_coaction;  // covered, A⊗L → A⊗L
    std::set<std::string> certified;

    const Hopf& q() const;
    const Hopf& l() const;
    // Γ(a) = Γ(a)(1⊗1) and Υ(a) = Υ(a)(1⊗1); unital Q / L only.
    LinearMap gamma() const;    // A → Q⊗A
    LinearMap upsilon() const;  // A → A⊗L
    // x▷a, a◁x on single elements
    SparseVec act_left(Index x, const SparseVec& a) const;
    SparseVec act_right(const SparseVec& a, Index x) const;

    ActionPack with_algebra(Algebra a) const;
};

// Covered forms from uncovered coactions.
LinearMap cover_left_coaction(const LinearMap& gamma, const Algebra& q);
LinearMap cover_right_coaction(const LinearMap& upsilon, const Algebra& l);

// Builders for the trivial structures x▷a = ε(x)a and Γ(a) = 1⊗a.
LinearMap trivial_left_action(const Hopf& q, const Algebra& a);
LinearMap trivial_right_action(const Algebra& a, const Hopf& l);
LinearMap trivial_left_coaction(const Algebra& a, const Hopf& q);   // covered
LinearMap trivial_right_coaction(const Algebra& a, const Hopf& l);  // covered

Verdict check_module_algebra(const ActionPack& p, Side side);
Verdict check_bimodule_algebra(const ActionPack& p);
Verdict check_comodule_algebra(const ActionPack& p, Side side);
Verdict check_bicomodule_algebra(const ActionPack& p);
// Runs every check that applies and records passing laws in `certified`.
Verdict certify_pack(ActionPack& p);

// x̂▷v = (id⊗⟨·,x̂⟩)Υ(v),  v◁x̂ = (⟨·,x̂⟩⊗id)Γ(v).
ActionPack dual_action_from_coaction(const Pairing& pairing, const ActionPack& pack);

// certification flags
namespace law {
inline constexpr const char* left_module = "left-module-algebra";
inline constexpr const char* right_module = "right-module-algebra";
inline constexpr const char* bimodule = "bimodule-algebra";
inline constexpr const char* left_comodule = "left-comodule-algebra";
inline constexpr const char* right_comodule = "right-comodule-algebra";
inline constexpr const char* bicomodule = "bicomodule-algebra";
inline constexpr const char* yetter_drinfeld = "yetter-drinfeld";
inline constexpr const char* long_left_left = "long-left-left";
inline constexpr const char* long_left_right = "long-left-right";
inline constexpr const char* long_right_right = "long-right-right";
inline constexpr const char* long_right_left = "long-right-left";
inline constexpr const char* four_sides = "four-sides-long";
}  // namespace law

}  // namespace mhf
