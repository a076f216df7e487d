#pragma once

#include <string>
#include <vector>

#include "mhforge/actions.hpp"

namespace mhf {

// Finite group given by its multiplication table.
class Group {
public:
    static Group cyclic(int n);
    static Group dihedral(int n);   // order 2n: r^k s^j, labels "r2s"
    static Group symmetric(int n);  // one-line permutations, (στ)(i) = σ(τ(i))
    static Group product(const Group& g, const Group& h);
    static Group from_family(const std::string& family, int n);

    const std::string& name() const { return name_; }
    Index size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    Index mul(Index a, Index b) const { return table_[a * size() + b]; }
    Index inv(Index a) const { return inverse_[a]; }
    Index identity() const { return identity_; }
    Index find(const std::string& label) const;

private:
    Group(std::string name, std::vector<std::string> labels, std::vector<Index> table);
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Index> table_;
    std::vector<Index> inverse_;
    Index identity_ = 0;
};

inline constexpr Index max_group_order = 24;

// Group axioms on the full table; refuses groups above max_group_order.
Condition check_group(const Group& g);

// kG: Δg = g⊗g, Sg = g⁻¹, εg = 1, g* = g⁻¹.
Hopf group_algebra(const Group& g);
// k(G): pointwise product on δ_h, Δδ_g = Σ_{ab=g} δ_a⊗δ_b, Sδ_g = δ_{g⁻¹}, δ_h* = δ_h.
Hopf function_algebra(const Group& g);
// ⟨g, δ_h⟩ = [g = h] between kG and k(G).
Pairing group_pairing(const Group& g);

// kG acting on A = k(G):  g▷δ_h = δ_{hg⁻¹},  δ_h◁g = δ_{g⁻¹h}.
ActionPack translation_pack(const Group& g);
// kG acting on A = k(G) by conjugation:  g▷δ_h = δ_{ghg⁻¹},  δ_h◁g = δ_{g⁻¹hg}.
ActionPack adjoint_pack(const Group& g);
// kG coacting on A = kG by Δ on both sides.
ActionPack regular_coaction_pack(const Group& g);
// kG acting on A = kG by conjugation and coacting by Δ: a Yetter–Drinfeld algebra.
ActionPack crossed_module_pack(const Group& g);
// Actions and coactions all trivial, on A = k(G) with kG on both sides.
ActionPack trivial_pack(const Group& g);

// ½(e⊗e + e⊗b + a⊗e − a⊗b) in kG⊗kG for commuting involutions a, b.
SparseVec involution_twist(const Group& g, Index a, Index b);

// 4-dim Taft algebra at q = -1: basis 1, g, x, gx with g² = 1, x² = 0,
// xg = -gx, Δx = x⊗1 + g⊗x, S(x) = -gx.
Hopf taft4();

// Finitely supported functions on ℤ, restricted to a window.  The ambient
// basis is δ_n for |n| ≤ 3N so that every product and cover of window
// elements up to triples is known; checks run over |n| ≤ N.
// T₁(δ_a⊗δ_b) = δ_{a-b}⊗δ_b and T₂(δ_x⊗δ_y) = δ_x⊗δ_{y-x}.
Hopf windowed_kz(int radius);
Index kz_index(int radius, long n);  // basis index of δ_n
long kz_point(int radius, Index i);  // n with basis index i
LinearMap kz_integral(const Hopf& kz);  // ψ(δ_n) = 1
// kC2 acting on the K(ℤ) window by reflection g▷δ_n = δ_{-n}.
ActionPack kz_reflection_pack(int radius);

// Any Hopf object coacting on itself by Δ, on the requested sides.
ActionPack regular_coaction_pack(const Hopf& h, bool left = true, bool right = true);

}  // namespace mhf
