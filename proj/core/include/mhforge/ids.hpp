#pragma once

// Condition identifiers used in reports and on the command line.  These are
// interface strings; everything else in the code base names things by role.
namespace mhf::ids {

// algebra laws
inline constexpr const char* assoc = "assoc";
inline constexpr const char* unit = "unit";
inline constexpr const char* star = "star";
inline constexpr const char* nondegenerate = "nondegenerate";
inline constexpr const char* multiplier = "multiplier";
inline constexpr const char* local_units = "local-units";
inline constexpr const char* window_stable = "window-stable";

// comultiplication / multiplier Hopf contract
inline constexpr const char* cover_defined = "cover-defined";
inline constexpr const char* delta_multiplicative = "delta-hom";
inline constexpr const char* coassoc = "coassoc";
inline constexpr const char* t1_bijective = "t1-bijective";
inline constexpr const char* t2_bijective = "t2-bijective";
inline constexpr const char* counit_t1 = "counit-t1";
inline constexpr const char* counit_t2 = "counit-t2";
inline constexpr const char* counit_multiplicative = "counit-hom";
inline constexpr const char* antipode_t1 = "antipode-t1";
inline constexpr const char* antipode_t2 = "antipode-t2";
inline constexpr const char* antipode_invertible = "regular";
inline constexpr const char* delta_star = "delta-star";
inline constexpr const char* left_integral = "left-integral";
inline constexpr const char* right_integral = "right-integral";
inline constexpr const char* integral_nonzero = "integral-nonzero";
inline constexpr const char* modular = "modular-element";
inline constexpr const char* pairing_nondegenerate = "pairing-nondegenerate";
inline constexpr const char* pairing_product = "pairing-product";
inline constexpr const char* pairing_coproduct = "pairing-coproduct";

// module / comodule algebras
inline constexpr const char* left_module = "left-module";
inline constexpr const char* right_module = "right-module";
inline constexpr const char* left_module_unital = "left-module-unital";
inline constexpr const char* right_module_unital = "right-module-unital";
inline constexpr const char* left_module_algebra = "left-module-algebra";
inline constexpr const char* right_module_algebra = "right-module-algebra";
inline constexpr const char* bimodule = "bimodule";
inline constexpr const char* left_comodule_coassoc = "left-comodule";
inline constexpr const char* right_comodule_coassoc = "right-comodule";
inline constexpr const char* left_comodule_counit = "left-comodule-counit";
inline constexpr const char* right_comodule_counit = "right-comodule-counit";
inline constexpr const char* left_comodule_algebra = "left-comodule-algebra";
inline constexpr const char* right_comodule_algebra = "right-comodule-algebra";
inline constexpr const char* bicomodule = "bicomodule";
inline constexpr const char* yetter_drinfeld = "2.4.4";

// twist pairs and twisted products
inline constexpr const char* twist_r_mult_b = "2.1";
inline constexpr const char* twist_r_mult_a = "2.2";
inline constexpr const char* twist_t_mult_b = "2.3";
inline constexpr const char* twist_t_mult_a = "2.4";
inline constexpr const char* twist_rt_exchange = "2.5";
inline constexpr const char* twist_r_unit = "2.6";
inline constexpr const char* twist_t_unit = "2.7";
inline constexpr const char* twist_counit = "2.8";
inline constexpr const char* twist_r_comult = "2.9";
inline constexpr const char* twist_t_comult = "2.10";
inline constexpr const char* twist_left_antipode = "2.11";
inline constexpr const char* twist_right_antipode = "2.12";
inline constexpr const char* twist_star_square = "2.13";
inline constexpr const char* twist_star_inverse = "2.14";
inline constexpr const char* twist_cover_delta = "2.15";
inline constexpr const char* twist_cover_counit = "2.16";
inline constexpr const char* twist_cover_left_antipode = "2.17";
inline constexpr const char* twist_cover_right_antipode = "2.18";
inline constexpr const char* twist_star_delta = "2.19";
inline constexpr const char* twist_star_antipode = "2.20";
inline constexpr const char* twisted_product_assoc = "prop-2.1.1";
inline constexpr const char* twisted_product_unit = "rem-2.1.2";
inline constexpr const char* twisted_nondegenerate = "prop-2.1.4";
inline constexpr const char* twisted_nondeg_hyp_left = "prop-2.1.4(1)";
inline constexpr const char* twisted_nondeg_hyp_right = "prop-2.1.4(2)";
inline constexpr const char* twisted_bialgebra = "thm-2.1.6";
inline constexpr const char* twisted_star = "prop-2.1.8";
inline constexpr const char* twisted_multiplier = "prop-2.1.9";
inline constexpr const char* twisted_multiplier_legs = "prop-2.1.9(2)";
inline constexpr const char* twisted_cover_maps = "prop-2.1.11";
inline constexpr const char* twisted_multiplier_hopf = "thm-2.1.12";
inline constexpr const char* twisted_star_hopf = "prop-2.1.13";
inline constexpr const char* twisted_integral = "prop-2.1.14";
inline constexpr const char* twisted_modular = "prop-2.1.15";

// smash family
inline constexpr const char* smash_assoc = "prop-2.2.3";
inline constexpr const char* smash_duality_iso = "lemma-2.2.2";
inline constexpr const char* smash_duality_relation = "2.2.3";
inline constexpr const char* twisted_smash_assoc = "prop-2.3.1";
inline constexpr const char* lr_smash_assoc = "prop-2.4.2";
inline constexpr const char* lr_vs_twisted_iso = "prop-2.4.3";
inline constexpr const char* mixed_assoc_iso = "prop-2.4.5";
inline constexpr const char* iterated_smash = "cor-2.4.6";
inline constexpr const char* bialgebra_map = "bialgebra-map";
inline constexpr const char* drinfeld_invertible = "twist-invertible";
inline constexpr const char* drinfeld_cocycle = "2.4.5";
inline constexpr const char* drinfeld_counit = "2.4.6";
inline constexpr const char* drinfeld_inverse_cocycle = "rem-2.4(1)";
inline constexpr const char* deformed_hopf = "2.4.7";
inline constexpr const char* deformed_antipode = "2.4.8";
inline constexpr const char* deformed_bimodule = "prop-2.4.6";
inline constexpr const char* deformed_bicomodule = "prop-2.4.7";
inline constexpr const char* twist_invariance = "prop-2.4.8";
inline constexpr const char* twist_invariance_star = "cor-2.4.9";
inline constexpr const char* reduction = "reduction";

// two-sided and Long products
inline constexpr const char* two_sided_assoc = "prop-3.1.1";
inline constexpr const char* two_sided_iso = "prop-3.1.2";
inline constexpr const char* two_sided_lr_assoc = "3.2.1";
inline constexpr const char* two_sided_lr_iso = "prop-3.2.1";
inline constexpr const char* long_ll = "4.1";
inline constexpr const char* long_lr = "4.2";
inline constexpr const char* long_rr = "4.3";
inline constexpr const char* long_rl = "4.4";
inline constexpr const char* long_left_product = "4.5";
inline constexpr const char* long_right_product = "4.6";
inline constexpr const char* long_lr_product = "4.7";
inline constexpr const char* long_enveloping_product = "4.8";
inline constexpr const char* long_enveloping = "ex-4.2";
inline constexpr const char* long_composite = "ex-4.5";
inline constexpr const char* long_product_assoc = "prop-4.3";
inline constexpr const char* long_factorization = "prop-4.4";
inline constexpr const char* long_alpha = "thm-4.6";

// isomorphism certificates
inline constexpr const char* iso_bijective = "bijective";
inline constexpr const char* iso_multiplicative = "multiplicative";
inline constexpr const char* iso_inverse = "inverse";

}  // namespace mhf::ids
