#include <doctest.h>

#include "mhforge/catalog.hpp"
#include "mhforge/ids.hpp"

using namespace mhf;

namespace {

Hopf with_co(const Hopf& h, const std::function<void(CoStructure&)>& edit) {
    CoStructure co = h.co();
    edit(co);
    return Hopf(h.alg(), co);
}

}  // namespace

TEST_SUITE("hopf") {
    TEST_CASE("catalog Hopf objects are certified") {
        for (const auto& h : {group_algebra(Group::cyclic(2)), group_algebra(Group::symmetric(3)),
                              function_algebra(Group::symmetric(3)), taft4(),
                              tensor_hopf(group_algebra(Group::cyclic(2)), function_algebra(Group::cyclic(3)))}) {
            auto v = certify_hopf(h);
            CHECK_MESSAGE(v.pass(), v.summary());
        }
    }

    TEST_CASE("kC2 with Δ(g) = g⊗e fails") {
        // still coassociative and multiplicative; the counit law and t2 break
        Hopf kc2 = group_algebra(Group::cyclic(2));
        const Space& s = kc2.space();
        auto bad_delta = LinearMap::from_columns(s, s * s, {SparseVec::unit(0), SparseVec::unit(2)});
        Hopf bad = Hopf::from_delta(kc2.alg(), bad_delta, kc2.co().counit, kc2.antipode());
        CHECK(check_comultiplication(bad).pass());
        auto v = check_multiplier_hopf(bad);
        CHECK_FALSE(v.pass());
        CHECK_FALSE(v.find(ids::t2_bijective)->pass);
        auto f = v.find(ids::counit_t1);
        REQUIRE(f);
        CHECK_FALSE(f->pass);
        REQUIRE(f->witness);
        CHECK(f->witness->tuple == std::vector<std::string>{"g", "e"});
    }

    TEST_CASE("kC2 with a non-multiplicative Δ fails the homomorphism law") {
        Hopf kc2 = group_algebra(Group::cyclic(2));
        const Space& s = kc2.space();
        // Δ(g) = g⊗g + e⊗e - e⊗g: not multiplicative
        auto d = LinearMap::from_columns(s, s * s, {SparseVec::unit(0), SparseVec::from_terms({{3, Scalar(1)}, {0, Scalar(1)}, {1, Scalar(-1)}})});
        auto v = check_comultiplication(Hopf::from_delta(kc2.alg(), d, kc2.co().counit, kc2.antipode()));
        CHECK_FALSE(v.pass());
        auto f = v.first_failure();
        REQUIRE(f);
        REQUIRE(f->witness);
    }

    TEST_CASE("rank-deficient t1 is caught with a kernel witness") {
        Hopf h = group_algebra(Group::cyclic(2));
        Hopf bad = with_co(h, [](CoStructure& co) {
            const Space& ss = co.t1.src();
            co.t1 = LinearMap::from_fn(ss, ss, [](Index) { return SparseVec::unit(0); });
        });
        auto v = check_multiplier_hopf(bad);
        auto c = v.find(ids::t1_bijective);
        REQUIRE(c);
        CHECK_FALSE(c->pass);
        REQUIRE(c->witness);
        CHECK(c->witness->note == "kernel element");
    }

    TEST_CASE("non-invertible antipode fails regularity") {
        Hopf h = group_algebra(Group::cyclic(3));
        Hopf bad = with_co(h, [](CoStructure& co) {
            co.antipode = LinearMap::from_fn(co.antipode.src(), co.antipode.tgt(), [](Index) { return SparseVec::unit(0); });
            co.antipode_inv.reset();
        });
        CHECK_FALSE(check_regular(bad).pass());
    }

    TEST_CASE("taft4: S is not involutive, left integral and modular element") {
        Hopf t = taft4();
        auto s2 = compose(t.antipode(), t.antipode());
        CHECK_FALSE(equal_maps(s2, LinearMap::identity(t.space())));
        CHECK(check_regular(t).pass());

        auto lefts = solve_integrals(t, Side::Left);
        REQUIRE(lefts.size() == 1);
        // the gx-coefficient functional, up to scale
        auto gx = functional_from(t.space(), SparseVec::unit(3));
        CHECK(check_integral(t, gx, Side::Left).pass);
        for (Index i = 0; i < 3; ++i) CHECK(lefts[0].column(i).empty());
        auto mod = modular_element(t, gx);
        CHECK(mod.certificate.pass);
        CHECK(mod.element == SparseVec::unit(1));  // δ = g
        // the right integral is the x-coefficient functional
        auto rights = solve_integrals(t, Side::Right);
        REQUIRE(rights.size() == 1);
        CHECK(check_integral(t, functional_from(t.space(), SparseVec::unit(2)), Side::Right).pass);
        CHECK_FALSE(check_integral(t, gx, Side::Right).pass);
    }

    TEST_CASE("group algebra integrals and unimodularity") {
        Group s3 = Group::symmetric(3);
        Hopf kg = group_algebra(s3), fg = function_algebra(s3);
        auto ce = functional_from(kg.space(), SparseVec::unit(s3.identity()));
        CHECK(check_integral(kg, ce, Side::Left).pass);
        CHECK(check_integral(kg, ce, Side::Right).pass);
        CHECK(modular_element(kg, ce).element == kg.alg().unit());

        std::vector<Term> ones;
        for (Index i = 0; i < fg.dim(); ++i) ones.push_back({i, Scalar(1)});
        auto sum = functional_from(fg.space(), SparseVec::from_terms(ones));
        CHECK(check_integral(fg, sum, Side::Left).pass);
        CHECK(check_integral(fg, sum, Side::Right).pass);
        CHECK(modular_element(fg, sum).element == fg.alg().unit());

        auto zero = functional_from(fg.space(), SparseVec());
        auto c = check_integral(fg, zero, Side::Left);
        CHECK_FALSE(c.pass);
        CHECK(c.id == ids::integral_nonzero);
    }

    TEST_CASE("k(S3) coproduct matches the pointwise oracle Δf(x,y) = f(xy)") {
        Group s3 = Group::symmetric(3);
        Hopf fg = function_algebra(s3);
        for (Index c = 0; c < 6; ++c) {
            auto col = fg.delta().column(c);
            for (Index x = 0; x < 6; ++x)
                for (Index y = 0; y < 6; ++y)
                    CHECK(col.coeff(x * 6 + y) == Scalar(s3.mul(x, y) == c ? 1 : 0));
        }
    }

    TEST_CASE("pairing between kS3 and k(S3)") {
        auto p = group_pairing(Group::symmetric(3));
        auto v = check_pairing(p);
        CHECK_MESSAGE(v.pass(), v.summary());
        auto c2 = group_pairing(Group::cyclic(2));
        for (Index x = 0; x < 2; ++x)
            for (Index f = 0; f < 2; ++f) CHECK(c2.value(x, f) == Scalar(x == f ? 1 : 0));
    }

    TEST_CASE("coopposite and opposite of a noncommutative, noncocommutative object") {
        Hopf t = taft4();
        CHECK(certify_hopf(coopposite(t)).pass());
        CHECK(certify_hopf(opposite(t)).pass());
    }

    TEST_CASE("K(Z) windows satisfy the covered contract") {
        for (int n : {4, 8}) {
            Hopf kz = windowed_kz(n);
            CHECK_FALSE(kz.alg().unital());
            auto v = certify_hopf(kz);
            CHECK_MESSAGE(v.pass(), v.summary());
            auto psi = kz_integral(kz);
            CHECK(check_integral(kz, psi, Side::Left).pass);
            CHECK(check_integral(kz, psi, Side::Right).pass);
        }
    }

    TEST_CASE("K(Z) covers follow Δf(x,y) = f(x+y)") {
        const int n = 4;
        Hopf kz = windowed_kz(n);
        const Index d = kz.dim();
        for (long a = -n; a <= n; ++a)
            for (long b = -n; b <= n; ++b) {
                // Δ(δ_a)(1⊗δ_b) = Σ_{x+y=a} δ_x⊗δ_y·δ_b
                auto col = kz.co().t1.column(kz_index(n, a) * d + kz_index(n, b));
                CHECK(col == SparseVec::unit(kz_index(n, a - b) * d + kz_index(n, b)));
                auto col2 = kz.co().t2.column(kz_index(n, a) * d + kz_index(n, b));
                CHECK(col2 == SparseVec::unit(kz_index(n, a) * d + kz_index(n, b - a)));
            }
    }

    TEST_CASE("K(Z) window stability") {
        Hopf small = windowed_kz(4), big = windowed_kz(8);
        const Index ds = small.dim(), db = big.dim();
        for (long a = -4; a <= 4; ++a)
            for (long b = -4; b <= 4; ++b) {
                auto cs = small.co().t1.column(kz_index(4, a) * ds + kz_index(4, b));
                auto cb = big.co().t1.column(kz_index(8, a) * db + kz_index(8, b));
                CHECK(small.space().label(cs.lead() / ds) == big.space().label(cb.lead() / db));
                CHECK(small.alg().product(kz_index(4, a), kz_index(4, b)).size() ==
                      big.alg().product(kz_index(8, a), kz_index(8, b)).size());
            }
    }
}
