#include <doctest.h>

#include "mhforge/catalog.hpp"
#include "mhforge/ids.hpp"
#include "mhforge/twostage.hpp"

using namespace mhf;

namespace {

ActionPack left_translation(const Group& g) {
    ActionPack p = translation_pack(g);
    p.right_action.reset();
    p.right_hopf.reset();
    return p;
}

ActionPack right_translation(const Group& g) {
    ActionPack p = translation_pack(g);
    p.left_action.reset();
    p.left_hopf.reset();
    return p;
}

ActionPack trivial_coactions(const Algebra& alg, const Hopf& q) {
    ActionPack p;
    p.alg = alg;
    p.left_hopf = q;
    p.right_hopf = q;
    p.left_coaction = trivial_left_coaction(alg, q);
    p.right_coaction = trivial_right_coaction(alg, q);
    return p;
}

ActionPack trivial_actions(const Algebra& alg, const Hopf& q) {
    ActionPack p;
    p.alg = alg;
    p.left_hopf = q;
    p.right_hopf = q;
    p.left_action = trivial_left_action(q, alg);
    p.right_action = trivial_right_action(alg, q);
    return p;
}

ActionPack right_coaction_only(const Hopf& h) {
    ActionPack p = regular_coaction_pack(h, false, true);
    p.left_coaction.reset();
    p.left_hopf.reset();
    return p;
}

ActionPack left_coaction_only(const Hopf& h) {
    ActionPack p = regular_coaction_pack(h, true, false);
    p.right_coaction.reset();
    p.right_hopf.reset();
    return p;
}

bool same_constants(const Algebra& x, const Algebra& y) {
    if (x.dim() != y.dim()) return false;
    for (Index i = 0; i < x.dim(); ++i)
        for (Index j = 0; j < x.dim(); ++j)
            if (!(x.product(i, j) == y.product(i, j))) return false;
    return true;
}

}  // namespace

TEST_SUITE("twostage") {
    TEST_CASE("two-sided smash over kC2: 8-dim table oracle") {
        Group c2 = Group::cyclic(2);
        auto p = build_two_sided_smash(left_translation(c2), regular_coaction_pack(c2), right_translation(c2));
        CHECK_MESSAGE(p.verdict.pass(), p.verdict.summary());
        REQUIRE(p.alg.dim() == 8);
        CHECK(p.alg.unital());
        // (δa⊗g⊗δb)(δa'⊗g'⊗δb') = [a = a'g⁻¹][g'⁻¹b = b'] δa⊗gg'⊗δb'
        auto idx = [](Index a, Index g, Index b) { return (a * 2 + g) * 2 + b; };
        for (Index a = 0; a < 2; ++a)
            for (Index g = 0; g < 2; ++g)
                for (Index b = 0; b < 2; ++b)
                    for (Index a2 = 0; a2 < 2; ++a2)
                        for (Index g2 = 0; g2 < 2; ++g2)
                            for (Index b2 = 0; b2 < 2; ++b2) {
                                bool hit = a == c2.mul(a2, c2.inv(g)) && c2.mul(c2.inv(g2), b) == b2;
                                SparseVec expect = hit ? SparseVec::unit(idx(a, c2.mul(g, g2), b2)) : SparseVec();
                                CHECK(p.alg.product(idx(a, g, b), idx(a2, g2, b2)) == expect);
                            }
    }

    TEST_CASE("two-sided smash over S3 against the pointwise formula") {
        Group s3 = Group::symmetric(3);
        auto p = build_two_sided_smash(left_translation(s3), regular_coaction_pack(s3), right_translation(s3));
        CHECK_MESSAGE(p.verdict.pass(), p.verdict.summary());
        REQUIRE(p.alg.dim() == 216);
        auto idx = [](Index a, Index g, Index b) { return (a * 6 + g) * 6 + b; };
        for (Index i = 0; i < 216; i += 7)
            for (Index j = 0; j < 216; j += 5) {
                Index a = i / 36, g = i / 6 % 6, b = i % 6, a2 = j / 36, g2 = j / 6 % 6, b2 = j % 6;
                bool hit = a == s3.mul(a2, s3.inv(g)) && s3.mul(s3.inv(g2), b) == b2;
                CHECK(p.alg.product(i, j) == (hit ? SparseVec::unit(idx(a, s3.mul(g, g2), b2)) : SparseVec()));
            }
    }

    TEST_CASE("trivial coactions on the middle factor give the tensor algebra") {
        Group c2 = Group::cyclic(2);
        Hopf kc2 = group_algebra(c2);
        auto mid = trivial_coactions(kc2.alg(), kc2);
        auto p = build_two_sided_smash(left_translation(c2), mid, right_translation(c2));
        CHECK(p.verdict.pass());
        Algebra fc2 = function_algebra(c2).alg();
        CHECK(same_constants(p.alg, tensor_algebra(tensor_algebra(fc2, kc2.alg()), fc2)));

        auto lr = build_two_sided_lr(trivial_coactions(kc2.alg(), kc2), trivial_actions(fc2, kc2),
                                     trivial_coactions(kc2.alg(), kc2));
        CHECK(lr.verdict.pass());
        CHECK(same_constants(lr.alg, tensor_algebra(tensor_algebra(kc2.alg(), fc2), kc2.alg())));
    }

    TEST_CASE("scalar middle factor reduces to A⊗B") {
        Group c2 = Group::cyclic(2);
        Hopf kc2 = group_algebra(c2);
        Algebra k = group_algebra(Group::cyclic(1)).alg();
        auto p = build_two_sided_smash(left_translation(c2), trivial_coactions(k, kc2), right_translation(c2));
        CHECK(p.verdict.pass());
        Algebra fc2 = function_algebra(c2).alg();
        CHECK(same_constants(p.alg, tensor_algebra(fc2, fc2)));
    }

    TEST_CASE("general form refuses maps of the wrong shape and catches a non-associative pair") {
        Group c2 = Group::cyclic(2);
        Algebra kc2 = group_algebra(c2).alg();
        LinearMap flip = flip_map(kc2.space(), kc2.space());
        CHECK_THROWS_AS(build_two_sided(kc2, kc2, kc2, LinearMap::identity(kc2.space()), flip), InputError);
        auto ok = build_two_sided(kc2, kc2, kc2, flip, flip);
        CHECK(ok.verdict.pass());
        CHECK(same_constants(ok.alg, tensor_algebra(tensor_algebra(kc2, kc2), kc2)));
        // 2·flip applies the factor twice on either side of (xy)z = x(yz), so it stays associative
        CHECK(build_two_sided(kc2, kc2, kc2, scaled(flip, Scalar(2)), flip).verdict.find(ids::assoc)->pass);
        // R(g⊗g) = g⊗g + e⊗e does not
        std::vector<SparseVec> cols;
        for (Index i = 0; i < 4; ++i) cols.push_back(flip.column(i) + (i == 3 ? SparseVec::unit(0) : SparseVec()));
        auto bad = build_two_sided(kc2, kc2, kc2, LinearMap::from_columns(flip.src(), flip.tgt(), cols), flip);
        CHECK_FALSE(bad.verdict.pass());
        auto c = bad.verdict.find(ids::assoc);
        REQUIRE(c);
        CHECK_FALSE(c->pass);
        CHECK(c->witness->tuple.size() == 3);
    }

    TEST_CASE("two-sided smash isomorphisms over kC2") {
        Group c2 = Group::cyclic(2);
        auto iso = iso_two_sided(left_translation(c2), regular_coaction_pack(c2), right_translation(c2));
        CHECK_MESSAGE(iso.verdict.pass(), iso.verdict.summary());
        const std::string id = ids::two_sided_iso;
        for (const std::string& part : {id + "(1)", id + "(2)", id + "(3)", id + "(4)", id}) {
            auto c = iso.verdict.find(part);
            REQUIRE_MESSAGE(c, part);
            CHECK(c->pass);
        }
    }

    TEST_CASE("two-sided smash isomorphisms with trivial structures are identities") {
        Group c2 = Group::cyclic(2);
        Hopf kc2 = group_algebra(c2);
        Algebra fc2 = function_algebra(c2).alg();
        auto iso = iso_two_sided(trivial_actions(fc2, kc2), trivial_coactions(kc2.alg(), kc2), trivial_actions(fc2, kc2));
        CHECK_MESSAGE(iso.verdict.pass(), iso.verdict.summary());
        CHECK(same_constants(iso.product.alg, tensor_algebra(tensor_algebra(fc2, kc2.alg()), fc2)));
    }

    TEST_CASE("two-sided L-R smash: formula oracle and isomorphisms over kC2") {
        Group c2 = Group::cyclic(2);
        Hopf kc2 = group_algebra(c2);
        auto p = build_two_sided_lr(right_coaction_only(kc2), translation_pack(c2), left_coaction_only(kc2));
        CHECK_MESSAGE(p.verdict.pass(), p.verdict.summary());
        // (a⊗δc⊗b)(a'⊗δc'⊗b') = aa' ⊗ (δc◁a')(b▷δc') ⊗ bb'
        //   δc◁a' = δ_{a'⁻¹c}, b▷δc' = δ_{c'b⁻¹}
        auto idx = [](Index a, Index c, Index b) { return (a * 2 + c) * 2 + b; };
        for (Index i = 0; i < 8; ++i)
            for (Index j = 0; j < 8; ++j) {
                Index a = i / 4, c = i / 2 % 2, b = i % 2, a2 = j / 4, c2i = j / 2 % 2, b2 = j % 2;
                bool hit = c2.mul(c2.inv(a2), c) == c2.mul(c2i, c2.inv(b));
                SparseVec expect = hit ? SparseVec::unit(idx(c2.mul(a, a2), c2.mul(c2.inv(a2), c), c2.mul(b, b2))) : SparseVec();
                CHECK(p.alg.product(i, j) == expect);
            }
        auto iso = iso_two_sided_lr(right_coaction_only(kc2), translation_pack(c2), left_coaction_only(kc2));
        CHECK_MESSAGE(iso.verdict.pass(), iso.verdict.summary());
        const std::string id = ids::two_sided_lr_iso;
        for (const std::string& part : {id + "(1)", id + "(2)", id + "(3)", id + "(4)"}) {
            auto c = iso.verdict.find(part);
            REQUIRE_MESSAGE(c, part);
            CHECK(c->pass);
        }
    }

    TEST_CASE("two-sided isomorphisms on the 216-dim S3 instances") {
        Group s3 = Group::symmetric(3);
        Hopf ks3 = group_algebra(s3);
        auto smash = iso_two_sided(left_translation(s3), regular_coaction_pack(s3), right_translation(s3));
        CHECK(smash.product.alg.dim() == 216);
        CHECK_MESSAGE(smash.verdict.pass(), smash.verdict.summary());
        auto lr = iso_two_sided_lr(right_coaction_only(ks3), translation_pack(s3), left_coaction_only(ks3));
        CHECK(lr.product.alg.dim() == 216);
        CHECK_MESSAGE(lr.verdict.pass(), lr.verdict.summary());
    }

    TEST_CASE("Long laws: trivial coaction, composite instance, crossed module") {
        Group s3 = Group::symmetric(3);
        Hopf ks3 = group_algebra(s3);
        ActionPack t = translation_pack(s3);
        t.left_coaction = trivial_left_coaction(t.alg, ks3);
        t.right_coaction = trivial_right_coaction(t.alg, ks3);
        for (LongLaw law : {LongLaw::LeftLeft, LongLaw::LeftRight, LongLaw::RightRight, LongLaw::RightLeft})
            CHECK(check_long(t, law).pass);
        CHECK(check_four_sides(t).pass());
        auto plain = twisted_product(t, LongProduct::Left);
        CHECK(same_constants(plain.alg, t.alg));

        ActionPack comp = long_composite_pack(translation_pack(s3), regular_coaction_pack(s3));
        auto fs = check_four_sides(comp);
        CHECK_MESSAGE(fs.pass(), fs.summary());
        CHECK(comp.certified.count(law::four_sides));

        // conjugation with Δ: Γ(x▷g) = xgx⁻¹⊗xgx⁻¹ but g⊗xgx⁻¹ is required
        ActionPack cm = crossed_module_pack(s3);
        auto c = check_long(cm, LongLaw::LeftLeft);
        CHECK_FALSE(c.pass);
        REQUIRE(c.witness);
        CHECK(c.witness->tuple.size() == 3);
        CHECK_THROWS_AS(twisted_product(cm, LongProduct::Left), InputError);
    }

    TEST_CASE("left-right Long law violated by conjugation with the right regular coaction") {
        Group s3 = Group::symmetric(3);
        ActionPack p = crossed_module_pack(s3);
        p.left_coaction.reset();
        p.right_hopf = group_algebra(s3);
        p.right_coaction = regular_coaction_pack(s3).right_coaction;
        auto c = check_long(p, LongLaw::LeftRight);
        CHECK_FALSE(c.pass);
        REQUIRE(c.witness);
        CHECK(c.id == std::string(ids::long_lr));
    }

    TEST_CASE("enveloping product: direct formula oracle") {
        Group s3 = Group::symmetric(3);
        ActionPack comp = long_composite_pack(translation_pack(s3), regular_coaction_pack(s3));
        auto env = twisted_product(comp, LongProduct::Enveloping);
        CHECK_MESSAGE(env.verdict.pass(), env.verdict.summary());
        CHECK(env.verdict.find(ids::long_enveloping)->pass);
        // on basis δ_h⊗g: a(-1) = g, a(1) = g, S⁻¹(g) = g⁻¹
        //   (δh⊗g)•(δh'⊗g') = δh (g▷δh'◁g⁻¹) ⊗ g g'
        //   g▷δh'◁g⁻¹ = δ_{g h' g⁻¹}
        for (Index i = 0; i < 36; ++i)
            for (Index j = 0; j < 36; ++j) {
                Index h = i / 6, g = i % 6, h2 = j / 6, g2 = j % 6;
                Index moved = s3.mul(s3.mul(g, h2), s3.inv(g));
                SparseVec expect = moved == h ? SparseVec::unit(h * 6 + s3.mul(g, g2)) : SparseVec();
                CHECK(env.alg.product(i, j) == expect);
            }
    }

    TEST_CASE("enveloping • on A⊗B is the twisted smash A⋆B") {
        Group s3 = Group::symmetric(3);
        ActionPack a = translation_pack(s3), b = regular_coaction_pack(s3);
        auto env = twisted_product(long_composite_pack(a, b), LongProduct::Enveloping);
        auto star = build_smash({SmashVariant::TwistedLeft, a, b, std::nullopt});
        CHECK(compare_tables(ids::long_enveloping, "", env.alg, star.alg).pass);
    }

    TEST_CASE("⊛ on A⊗B is A◇_l B and on B⊗A is B◇_r A") {
        Group s3 = Group::symmetric(3);
        ActionPack a = translation_pack(s3), b = regular_coaction_pack(s3);
        auto lr = twisted_product(long_composite_pack(a, b), LongProduct::LeftRight);
        CHECK_MESSAGE(lr.verdict.pass(), lr.verdict.summary());
        auto dl = build_smash({SmashVariant::LrLeft, a, b, std::nullopt});
        CHECK(compare_tables(ids::long_composite, "", lr.alg, dl.alg).pass);
        auto rl = twisted_product(long_composite_pack(a, b, false), LongProduct::LeftRight);
        auto dr = build_smash({SmashVariant::LrRight, a, b, std::nullopt});
        CHECK(compare_tables(ids::long_composite, "", rl.alg, dr.alg).pass);
    }

    TEST_CASE("Long products are associative on the composite instance") {
        Group s3 = Group::symmetric(3);
        ActionPack comp = long_composite_pack(translation_pack(s3), regular_coaction_pack(s3));
        for (auto kind : {LongProduct::Left, LongProduct::Right, LongProduct::LeftRight, LongProduct::Enveloping}) {
            auto r = twisted_product(comp, kind);
            CHECK_MESSAGE(r.verdict.pass(), r.verdict.summary());
            CHECK(r.verdict.find(ids::long_product_assoc)->pass);
        }
    }

    TEST_CASE("factorization of ⊛") {
        Group s3 = Group::symmetric(3);
        ActionPack comp = long_composite_pack(translation_pack(s3), regular_coaction_pack(s3));
        auto v = check_factorization(comp);
        CHECK_MESSAGE(v.pass(), v.summary());

        // trivial right structures: • and ⊛ coincide
        ActionPack left_only = comp;
        Hopf ks3 = group_algebra(s3);
        left_only.right_action = trivial_right_action(left_only.alg, ks3);
        left_only.right_coaction = trivial_right_coaction(left_only.alg, ks3);
        auto bullet = twisted_product(left_only, LongProduct::Left);
        auto circ = twisted_product(left_only, LongProduct::LeftRight);
        CHECK(same_constants(bullet.alg, circ.alg));
        CHECK_FALSE(same_constants(twisted_product(comp, LongProduct::Left).alg,
                                   twisted_product(comp, LongProduct::LeftRight).alg));
    }

    TEST_CASE("factorization catches a perturbed coaction") {
        Group c2 = Group::cyclic(2);
        Hopf kc2 = group_algebra(c2);
        ActionPack comp = long_composite_pack(translation_pack(c2), regular_coaction_pack(c2));
        // right coaction of the second leg replaced by the trivial one on g only
        const Index d = comp.alg.dim(), q = kc2.dim();
        std::vector<SparseVec> cols;
        for (Index i = 0; i < d * q; ++i) cols.push_back(comp.right_coaction->column(i));
        Index u = 1, y = 0;  // δ_e⊗g, against e
        cols[u * q + y] = SparseVec::unit(u * q + y);
        comp.right_coaction = LinearMap::from_columns(comp.alg.space() * kc2.space(), comp.alg.space() * kc2.space(), cols);
        auto v = check_factorization(comp);
        CHECK_FALSE(v.pass());
    }

    TEST_CASE("α: (A,•) ≅ (A,⊛) on the composite S3 instance") {
        Group s3 = Group::symmetric(3);
        ActionPack a = translation_pack(s3), b = regular_coaction_pack(s3);
        auto alpha = iso_alpha(long_composite_pack(a, b));
        CHECK_MESSAGE(alpha.verdict.pass(), alpha.verdict.summary());
        CHECK(alpha.verdict.find(ids::long_alpha)->pass);
        // α(a⊗b) = a◁b(1) ⊗ b0 is the transport between ⋆ and ◇
        auto phi = iso_lr_vs_twisted(a, b, false);
        for (Index i = 0; i < 36; ++i) {
            CHECK(alpha.map.column(i) == phi.map.column(i));
            CHECK(alpha.inverse.column(i) == phi.inverse.column(i));
        }
        // mirrored composite B⊗A
        auto mirrored = iso_alpha(long_composite_pack(a, b, false));
        CHECK_MESSAGE(mirrored.verdict.pass(), mirrored.verdict.summary());
    }

    TEST_CASE("α is the identity for a trivial right coaction") {
        Group s3 = Group::symmetric(3);
        Hopf ks3 = group_algebra(s3);
        ActionPack comp = long_composite_pack(translation_pack(s3), regular_coaction_pack(s3));
        comp.right_coaction = trivial_right_coaction(comp.alg, ks3);
        auto alpha = iso_alpha(comp);
        CHECK_MESSAGE(alpha.verdict.pass(), alpha.verdict.summary());
        for (Index i = 0; i < 36; ++i) CHECK(alpha.map.column(i) == SparseVec::unit(i));
    }

    TEST_CASE("α needs a four-sides certification") {
        Group s3 = Group::symmetric(3);
        CHECK_THROWS_AS(iso_alpha(crossed_module_pack(s3)), InputError);
    }
}
