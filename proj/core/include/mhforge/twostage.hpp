#pragma once

#include <optional>
#include <string>

#include "mhforge/smash.hpp"

namespace mhf {

// A⊗C⊗B with (a⊗c⊗b)(a'⊗c'⊗b') = a a'_R ⊗ c_R c'_T ⊗ b_T b'
// for R: C⊗A → A⊗C and T: B⊗C → C⊗B.
struct TwoSidedProduct {
    Algebra a, c, b;
    LinearMap r;
    LinearMap t;
    Algebra alg;
    Verdict verdict;
};

// General form: exhaustive associativity, plus the unit when all three
// factors are unital and R, T fix units.
TwoSidedProduct build_two_sided(const Algebra& a, const Algebra& c, const Algebra& b, const LinearMap& r,
                                const LinearMap& t, const std::string& assoc_id = "assoc");

// A left Q-module algebra, C a Q-L-bicomodule algebra, B a right L-module algebra:
//   R(c⊗a) = c(-1)▷a ⊗ c0,  T(b⊗c) = c0 ⊗ b◁c(1)
TwoSidedProduct build_two_sided_smash(ActionPack a, ActionPack c, ActionPack b);
// A right Q-comodule algebra, C a Q-bimodule algebra, B a left Q-comodule algebra:
//   R(c⊗a) = a0 ⊗ c◁a(1),  T(b⊗c) = b(-1)▷c ⊗ b0
TwoSidedProduct build_two_sided_lr(ActionPack a, ActionPack c, ActionPack b);

// A⊗B with x▷(a⊗b)◁y = x▷a ⊗ b◁y.
ActionPack tensor_module_pack(const ActionPack& a, const ActionPack& b);
// A⊗B with Γ(a⊗b) = b(-1) ⊗ (a⊗b0), Υ(a⊗b) = (a0⊗b) ⊗ a(1).
ActionPack tensor_comodule_pack(const ActionPack& a, const ActionPack& b);

struct TwoSidedIso {
    TwoSidedProduct product;
    Verdict verdict;
};
// Parts (1)-(4) for the two-sided smash: (A⊗B)◇_l C and C◇_r (A⊗B) onto
// A⊗C⊗B by reordering, the ⋆/◇ chain, and the iterated smash tables.
TwoSidedIso iso_two_sided(const ActionPack& a, const ActionPack& c, const ActionPack& b);
// Same for the two-sided L-R smash with (A⊗B)◇_r C and C◇_l (A⊗B).
TwoSidedIso iso_two_sided_lr(const ActionPack& a, const ActionPack& c, const ActionPack& b);

enum class LongLaw { LeftLeft, LeftRight, RightRight, RightLeft };
const char* long_law_id(LongLaw law);

//   LeftLeft:   Γ(x▷a)(y⊗1) = a(-1)y ⊗ x▷a0
//   LeftRight:  Υ(x▷a)(1⊗y) = x▷a0 ⊗ a(1)y
//   RightRight: Υ(a◁x)(1⊗y) = a0◁x ⊗ a(1)y
//   RightLeft:  Γ(a◁x)(y⊗1) = a(-1)y ⊗ a0◁x
Condition check_long(const ActionPack& pack, LongLaw law);
// All four laws together with the bimodule and bicomodule algebra laws.
Verdict check_four_sides(ActionPack& pack);

enum class LongProduct {
    Left,        // a•b = a0(a(-1)▷b)
    Right,       // a∗b = (a◁b(1))b0
    LeftRight,   // a⊛b = (a0◁b(1))(a(-1)▷b0)
    Enveloping,  // a•b = a0(a(-1)▷b◁S⁻¹(a(1)))
};
const char* long_product_name(LongProduct kind);

struct LongResult {
    Algebra alg;
    Verdict verdict;
};
// Certifies what `kind` needs (throws InputError when it fails), builds the
// product on the same space and checks associativity and the unit.
LongResult twisted_product(ActionPack pack, LongProduct kind);

// A⊗B (or B⊗A) with the actions of a bimodule algebra A on its leg and the
// coactions of a bicomodule algebra B on the other.  Four-sides Long.
ActionPack long_composite_pack(const ActionPack& module, const ActionPack& comodule, bool module_first = true);

// A as a left Q⊗Q^op-Long module algebra: (x⊗y)▷a = x▷a◁y,
// Γ(a) = a(-1) ⊗ S⁻¹(a(1)) ⊗ a0.
ActionPack enveloping_pack(const ActionPack& pack);

// (A,•) is right-right Long and its ∗ is ⊛; (A,∗) is left-left Long and its • is ⊛.
Verdict check_factorization(const ActionPack& pack);

struct AlphaIso {
    LongResult source;  // (A, •) from the enveloping pack
    LongResult target;  // (A, ⊛)
    LinearMap map;      // a ↦ a0◁a(1)
    LinearMap inverse;  // a ↦ a0◁S⁻¹(a(1))
    Verdict verdict;
};
AlphaIso iso_alpha(const ActionPack& pack);

}  // namespace mhf
