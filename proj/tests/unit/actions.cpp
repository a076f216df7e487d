#include <doctest.h>

#include "mhforge/catalog.hpp"
#include "mhforge/ids.hpp"

using namespace mhf;

TEST_SUITE("actions") {
    TEST_CASE("translation actions of kS3 on k(S3) are a bimodule algebra") {
        Group s3 = Group::symmetric(3);
        auto p = translation_pack(s3);
        auto v = certify_pack(p);
        CHECK_MESSAGE(v.pass(), v.summary());
        CHECK(p.certified.count(law::bimodule));
        // g▷δ_h = δ_{hg⁻¹}
        for (Index g = 0; g < 6; ++g)
            for (Index h = 0; h < 6; ++h) {
                CHECK(p.act_left(g, SparseVec::unit(h)) == SparseVec::unit(s3.mul(h, s3.inv(g))));
                CHECK(p.act_right(SparseVec::unit(h), g) == SparseVec::unit(s3.mul(s3.inv(g), h)));
            }
    }

    TEST_CASE("adjoint and trivial packs certify") {
        Group s3 = Group::symmetric(3);
        auto a = adjoint_pack(s3);
        certify_pack(a);
        CHECK(a.certified.count(law::left_module));
        CHECK(a.certified.count(law::right_module));
        // conjugation from both sides does not commute on a nonabelian group
        CHECK_FALSE(a.certified.count(law::bimodule));
        auto t = trivial_pack(s3);
        auto v = certify_pack(t);
        CHECK_MESSAGE(v.pass(), v.summary());
        CHECK(t.certified.count(law::bicomodule));
    }

    TEST_CASE("corrupted action table fails the module algebra law with a triple") {
        auto p = translation_pack(Group::symmetric(3));
        auto cols = std::vector<SparseVec>();
        for (Index i = 0; i < 36; ++i) cols.push_back(p.left_action->column(i));
        cols[7] = cols[7] + SparseVec::unit(0);
        p.left_action = LinearMap::from_columns(p.left_action->src(), p.left_action->tgt(), cols);
        auto v = check_module_algebra(p, Side::Left);
        CHECK_FALSE(v.pass());
        auto f = v.first_failure();
        REQUIRE(f);
        REQUIRE(f->witness);
        CHECK(f->witness->tuple.size() == 3);
    }

    TEST_CASE("mismatched left and right actions fail the bimodule law") {
        Group s3 = Group::symmetric(3);
        auto p = translation_pack(s3);
        auto q = adjoint_pack(s3);
        p.right_action = q.right_action;
        auto v = check_bimodule_algebra(p);
        CHECK_FALSE(v.find(ids::bimodule)->pass);
    }

    TEST_CASE("Δ as a two-sided coaction of kS3 on itself") {
        auto p = regular_coaction_pack(Group::symmetric(3));
        auto v = certify_pack(p);
        CHECK_MESSAGE(v.pass(), v.summary());
        CHECK(p.certified.count(law::bicomodule));
    }

    TEST_CASE("Γ = Δ with Υ = τΔ on a noncocommutative object is not a bicomodule") {
        Hopf t = taft4();
        ActionPack p;
        p.alg = t.alg();
        p.left_hopf = t;
        p.right_hopf = t;
        p.left_coaction = cover_left_coaction(t.delta(), t.alg());
        p.right_coaction = cover_right_coaction(compose(flip_map(t.space(), t.space()), t.delta()), t.alg());
        auto v = check_bicomodule_algebra(p);
        CHECK_FALSE(v.pass());
    }

    TEST_CASE("corrupted coaction fails") {
        Hopf kg = group_algebra(Group::symmetric(3));
        ActionPack p;
        p.alg = kg.alg();
        p.left_hopf = kg;
        auto cols = std::vector<SparseVec>();
        for (Index i = 0; i < 6; ++i) cols.push_back(kg.delta().column(i));
        cols[2] = SparseVec::unit(2 * 6 + 0);
        p.left_coaction = cover_left_coaction(LinearMap::from_columns(kg.space(), kg.space() * kg.space(), cols), kg.alg());
        CHECK_FALSE(check_comodule_algebra(p, Side::Left).pass());
    }

    TEST_CASE("dual action of k(C2) on kC2 from Υ = Δ is δ_h▷g = [h = g] g") {
        Group c2 = Group::cyclic(2);
        auto pair = group_pairing(c2);
        auto p = regular_coaction_pack(c2);
        auto d = dual_action_from_coaction(pair, p);
        for (Index h = 0; h < 2; ++h)
            for (Index g = 0; g < 2; ++g) {
                CHECK(d.act_left(h, SparseVec::unit(g)) == (h == g ? SparseVec::unit(g) : SparseVec()));
                CHECK(d.act_right(SparseVec::unit(g), h) == (h == g ? SparseVec::unit(g) : SparseVec()));
            }
        auto v = certify_pack(d);
        CHECK_MESSAGE(v.pass(), v.summary());
    }

    TEST_CASE("dual of a certified comodule algebra is a certified module algebra (S3)") {
        Group s3 = Group::symmetric(3);
        auto d = dual_action_from_coaction(group_pairing(s3), regular_coaction_pack(s3));
        auto v = certify_pack(d);
        CHECK_MESSAGE(v.pass(), v.summary());
        CHECK(d.certified.count(law::bimodule));
    }

    TEST_CASE("trivial coaction dualizes to the trivial action") {
        Group s3 = Group::symmetric(3);
        auto pair = group_pairing(s3);
        Hopf kg = pair.q;
        ActionPack p;
        p.alg = kg.alg();
        p.right_hopf = kg;
        p.right_coaction = trivial_right_coaction(kg.alg(), kg);
        auto d = dual_action_from_coaction(pair, p);
        auto eps = pair.qhat.co().counit;
        for (Index f = 0; f < 6; ++f)
            for (Index v = 0; v < 6; ++v)
                CHECK(d.act_left(f, SparseVec::unit(v)) == SparseVec::unit(v).scaled(eps.column(f).coeff(0)));
    }

    TEST_CASE("coaction round trip through the pairing") {
        // rebuild Υ from the dual action by transposing through the pairing matrix
        Group s3 = Group::symmetric(3);
        auto pair = group_pairing(s3);
        auto p = regular_coaction_pack(s3);
        auto d = dual_action_from_coaction(pair, p);
        auto ups = p.upsilon();
        for (Index v = 0; v < 6; ++v) {
            Accumulator acc;
            for (Index f = 0; f < 6; ++f)
                for (const auto& t : d.act_left(f, SparseVec::unit(v)))
                    for (Index x = 0; x < 6; ++x)
                        if (pair.value(x, f) == Scalar(1)) acc.add(t.idx * 6 + x, t.c);  // dual basis of δ_f is f
            CHECK(acc.take() == ups.column(v));
        }
    }
}
