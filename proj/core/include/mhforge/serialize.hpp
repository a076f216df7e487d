#pragma once

#include <string>

#include <json.hpp>

#include "mhforge/registry.hpp"

namespace mhf {

using Json = nlohmann::ordered_json;

// Definition schema.  Scalars are strings ("3", "-1/2", "1+i") or integers.
// Basis references are indices or labels.  Missing structure constants are
// zero.
//
//   algebra:  {name?, space?, field?: "Q"|"Q(i)", basis: [labels], factors?: [{name, basis}],
//              mul: [[i, j, k, c]...], unit?: element, star?: [[i, element]...],
//              domain?: [basis refs], local_units?: "idempotents"}
//   element:  a label, [[i, c]...], or {label: c, ...}
//   map:      [[src, tgt, c]...] in flattened tensor indices, or
//             {entries: [...], undefined: [src...]} for partial maps
//   hopf:     algebra fields plus {coproduct?: {T1, T2, delta}, counit: [c...],
//             antipode: map, antipode_inv?: map}
//   pack:     {algebra, left?: hopf, right?: hopf, left_action?, right_action?,
//              left_coaction?, right_coaction?} with uncovered coactions A → Q⊗A, A → A⊗L
//   twist:    {name?, A: algebra, B: algebra, R: map, T: map}
//
// Any object may instead be {"catalog": name} or, for Hopf objects,
// {"group_algebra": {family, n}} / {"function_algebra": {family, n}}.

std::string scalar_text(const Scalar& s);
Scalar scalar_from(const Json& j, const std::string& where);

Json element_json(const Space& s, const SparseVec& v);
SparseVec element_from(const Json& j, const Space& s, const std::string& where);

Json map_json(const LinearMap& m);
LinearMap map_from(const Json& j, const Space& src, const Space& tgt, const std::string& where);

Json algebra_json(const Algebra& a);
Algebra algebra_from(const Json& j, const std::string& where = "$");

Json hopf_json(const Hopf& h);
Hopf hopf_from(const Json& j, const std::string& where = "$");

Json pack_json(const ActionPack& p);
ActionPack pack_from(const Json& j, const std::string& where = "$");

Json twist_json(const TwistPair& tp);
TwistPair twist_from(const Json& j, const std::string& where = "$");

// Reads a file when `ref` names one, otherwise treats it as a catalog name.
Json load_reference(const std::string& ref);
Json parse_text(const std::string& text, const std::string& origin);

}  // namespace mhf
