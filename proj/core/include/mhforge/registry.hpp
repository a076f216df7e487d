#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mhforge/catalog.hpp"
#include "mhforge/smash.hpp"
#include "mhforge/twist.hpp"
#include "mhforge/twostage.hpp"

namespace mhf {

// Twist pairs on k(G)⊗kG from group data.
//   translation:   R(g⊗δ_h) = δ_{hg⁻¹}⊗g,  T(δ_h⊗g) = δ_{g⁻¹h}⊗g
//   adjoint smash: R(g⊗δ_h) = δ_{ghg⁻¹}⊗g,  T = id
//   conjugation:   R = τ,                   T(δ_h⊗g) = δ_{g⁻¹hg}⊗g
TwistPair translation_twist(const Group& g);
TwistPair adjoint_smash_twist(const Group& g);
TwistPair conjugation_twist(const Group& g);
// K(Z) window ⊗ kC2 with g▷δ_n = δ_{-n}, T = id.
TwistPair reflection_twist(int radius);

// D(Q) = Q̂⋆Q^cop with Δ(x̂⋆y) = x̂1⋆y2 ⊗ x̂2⋆y1 and S(x̂⋆y) = (1⋆S⁻¹(y))(S(x̂)⋆1).
// Not certified here.
Hopf double_hopf(const Pairing& pairing);

// Names accepted wherever an input can be a catalog reference.
//   groups:  C<n>, D<n>, S<n>, K4, and products such as C2xC2
//   Hopf:    k<G>, f<G> (= k(G)), taft4, KZ:<N>, D(<G>)
//   packs:   f<G> and translation:<G>, adjoint:<G>, k<G> and regular:<G>,
//            crossed:<G>, trivial:<G>, composite:<G>, composite-rev:<G>,
//            taft4, KZ:<N> and reflection:<N>
//   twists:  flip:<hopf>,<hopf>, translation:<G>, adjoint-smash:<G>,
//            conjugation:<G>, reflection:<N>
Group group_by_name(const std::string& name);
Hopf hopf_by_name(const std::string& name);
ActionPack pack_by_name(const std::string& name);
TwistPair twist_by_name(const std::string& name);
// (kind, name) pairs for listings: kind is hopf, pack or twist
std::vector<std::pair<std::string, std::string>> catalog_examples();

}  // namespace mhf
