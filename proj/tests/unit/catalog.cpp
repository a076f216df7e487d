#include <doctest.h>

#include <random>

#include "mhforge/catalog.hpp"
#include "mhforge/error.hpp"
#include "mhforge/ids.hpp"
#include "mhforge/registry.hpp"

using namespace mhf;

TEST_SUITE("catalog") {
    TEST_CASE("group families satisfy the axioms") {
        for (const auto& g : {Group::cyclic(1), Group::cyclic(5), Group::dihedral(3), Group::dihedral(4),
                              Group::symmetric(3), Group::symmetric(4), Group::from_family("klein", 0),
                              Group::product(Group::cyclic(2), Group::cyclic(3))}) {
            auto c = check_group(g);
            CHECK_MESSAGE(c.pass, g.name());
            for (Index a = 0; a < g.size(); ++a) CHECK(g.mul(a, g.inv(a)) == g.identity());
        }
        CHECK(Group::symmetric(4).size() == 24);
        CHECK(Group::dihedral(4).size() == 8);
    }

    TEST_CASE("orders and labels") {
        Group s3 = Group::symmetric(3);
        CHECK(s3.labels().size() == 6);
        CHECK(s3.labels()[s3.identity()] == s3.labels()[s3.mul(s3.identity(), s3.identity())]);
        // composition (στ)(i) = σ(τ(i)) is not commutative on S3
        bool commutes = true;
        for (Index a = 0; a < 6; ++a)
            for (Index b = 0; b < 6; ++b) commutes = commutes && s3.mul(a, b) == s3.mul(b, a);
        CHECK_FALSE(commutes);
        Group d4 = Group::dihedral(4);
        Index r = d4.find("r"), s = d4.find("s");
        CHECK(d4.mul(d4.mul(s, r), s) == d4.inv(r));
        CHECK(d4.mul(d4.find("r2"), d4.find("r2")) == d4.identity());
        CHECK_THROWS_AS(d4.find("nope"), InputError);
        CHECK_THROWS_AS(Group::from_family("mystery", 3), InputError);
        CHECK_THROWS_AS(Group::symmetric(5), InputError);
        CHECK_THROWS_AS(Group::cyclic(0), InputError);
    }

    TEST_CASE("order cap") {
        Group big = Group::product(Group::symmetric(4), Group::cyclic(2));
        CHECK_FALSE(check_group(big).pass);
        CHECK_THROWS_AS(group_algebra(big), InputError);
        CHECK_THROWS_AS(function_algebra(big), InputError);
        CHECK_NOTHROW(group_algebra(Group::symmetric(4)));
    }

    TEST_CASE("kG and k(G) are dual through the pairing") {
        for (const auto& g : {Group::cyclic(2), Group::symmetric(3), Group::dihedral(4)}) {
            auto p = group_pairing(g);
            const Index n = g.size();
            // ⟨Δx, f⊗h⟩ = ⟨x, fh⟩ and ⟨xy, f⟩ = ⟨x⊗y, Δf⟩, evaluated from the tables
            for (Index x = 0; x < n; ++x)
                for (Index f = 0; f < n; ++f)
                    for (Index h = 0; h < n; ++h) {
                        Scalar lhs(0), rhs(0);
                        for (const auto& t : p.q.delta().column(x)) lhs += t.c * p.value(t.idx / n, f) * p.value(t.idx % n, h);
                        for (const auto& t : p.qhat.alg().product(f, h)) rhs += t.c * p.value(x, t.idx);
                        CHECK(lhs == rhs);
                        Scalar l2(0), r2(0);
                        for (const auto& t : p.q.alg().product(x, h)) l2 += t.c * p.value(t.idx, f);
                        for (const auto& t : p.qhat.delta().column(f)) r2 += t.c * p.value(x, t.idx / n) * p.value(h, t.idx % n);
                        CHECK(l2 == r2);
                    }
            CHECK(check_pairing(p).pass());
        }
    }

    TEST_CASE("C2: dual pairing matrix is the identity") {
        auto p = group_pairing(Group::cyclic(2));
        for (Index x = 0; x < 2; ++x)
            for (Index f = 0; f < 2; ++f) CHECK(p.value(x, f) == Scalar(x == f ? 1 : 0));
    }

    TEST_CASE("k(S3): ψ(f) = Σ f(g) is a two-sided integral") {
        Hopf fs3 = function_algebra(Group::symmetric(3));
        SparseVec ones;
        for (Index i = 0; i < 6; ++i) ones = ones + SparseVec::unit(i);
        auto psi = functional_from(fs3.space(), ones);
        CHECK(check_integral(fs3, psi, Side::Left).pass);
        CHECK(check_integral(fs3, psi, Side::Right).pass);
        // ψ(f) = f(e) is not invariant
        auto bad = functional_from(fs3.space(), SparseVec::unit(Group::symmetric(3).identity()));
        CHECK_FALSE(check_integral(fs3, bad, Side::Left).pass);
    }

    TEST_CASE("translation convention g▷δ_h = δ_{hg⁻¹}, δ_h◁g = δ_{g⁻¹h}") {
        Group s3 = Group::symmetric(3);
        ActionPack p = translation_pack(s3);
        const Index n = 6;
        for (Index g = 0; g < n; ++g)
            for (Index h = 0; h < n; ++h) {
                CHECK(p.left_action->column(g * n + h) == SparseVec::unit(s3.mul(h, s3.inv(g))));
                CHECK(p.right_action->column(h * n + g) == SparseVec::unit(s3.mul(s3.inv(g), h)));
            }
        auto v = certify_pack(p);
        CHECK_MESSAGE(v.pass(), v.summary());
        CHECK(p.certified.count(law::left_module));
        CHECK(p.certified.count(law::bimodule));
    }

    TEST_CASE("emitted packs certify") {
        Group s3 = Group::symmetric(3);
        ActionPack triv = trivial_pack(s3);
        CHECK(certify_pack(triv).pass());
        ActionPack reg = regular_coaction_pack(s3);
        CHECK(certify_pack(reg).pass());
        CHECK(reg.certified.count(law::bicomodule));
        ActionPack cm = crossed_module_pack(s3);
        CHECK(certify_pack(cm).pass());
        CHECK(cm.certified.count(law::left_module));
        CHECK(cm.certified.count(law::left_comodule));
        ActionPack taft = regular_coaction_pack(taft4());
        CHECK(certify_pack(taft).pass());
        for (int n : {4, 8}) {
            ActionPack refl = kz_reflection_pack(n);
            auto v = certify_pack(refl);
            CHECK_MESSAGE(v.pass(), v.summary());
        }
    }

    TEST_CASE("taft4") {
        Hopf t = taft4();
        CHECK(t.dim() == 4);
        CHECK(certify_hopf(t).pass());
        auto s2 = compose(t.antipode(), t.antipode());
        bool involutive = true;
        for (Index i = 0; i < 4; ++i) involutive = involutive && s2.column(i) == SparseVec::unit(i);
        CHECK_FALSE(involutive);
        auto lefts = solve_integrals(t, Side::Left);
        REQUIRE(lefts.size() == 1);
        auto mod = modular_element(t, lefts.front());
        CHECK(mod.element == SparseVec::unit(*t.space().find("g")));
    }

    TEST_CASE("K(Z): no unit, local units for random finitely supported elements") {
        Hopf kz = windowed_kz(4);
        CHECK_FALSE(kz.alg().unital());
        std::mt19937 rng(7);
        std::uniform_int_distribution<long> pt(-4, 4);
        std::uniform_int_distribution<int> cf(-3, 3);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<SparseVec> elems;
            for (int e = 0; e < 3; ++e) {
                std::vector<Term> terms;
                for (int k = 0; k < 3; ++k) terms.push_back({kz_index(4, pt(rng)), Scalar(cf(rng))});
                elems.push_back(SparseVec::from_terms(terms));
            }
            auto u = find_local_units(kz.alg(), elems);
            for (const auto& s : elems) {
                CHECK(kz.alg().mul(u.left, s) == s);
                CHECK(kz.alg().mul(s, u.right) == s);
            }
        }
    }

    TEST_CASE("K(Z): ε(δ_n) = [n = 0], S(δ_n) = δ_{-n}") {
        for (int n : {4, 8}) {
            Hopf kz = windowed_kz(n);
            for (long a = -n; a <= n; ++a) {
                CHECK(kz.counit(kz_index(n, a)) == Scalar(a == 0 ? 1 : 0));
                CHECK(kz.antipode().column(kz_index(n, a)) == SparseVec::unit(kz_index(n, -a)));
                CHECK(kz_point(n, kz_index(n, a)) == a);
            }
        }
    }

    TEST_CASE("involution twist needs distinct commuting involutions") {
        Group k4 = Group::product(Group::cyclic(2), Group::cyclic(2));
        CHECK_NOTHROW(involution_twist(k4, 1, 2));
        CHECK_THROWS_AS(involution_twist(k4, 1, 1), InputError);
        Group d4 = Group::dihedral(4);
        CHECK_THROWS_AS(involution_twist(d4, d4.find("r"), d4.find("s")), InputError);    // r is not an involution
        CHECK_THROWS_AS(involution_twist(d4, d4.find("s"), d4.find("rs")), InputError);   // do not commute
        CHECK_NOTHROW(involution_twist(d4, d4.find("r2"), d4.find("s")));
        auto j = involution_twist(k4, 1, 2);
        CHECK(j.size() == 4);
    }

    TEST_CASE("names resolve to catalog objects") {
        CHECK(hopf_by_name("kC2").dim() == 2);
        CHECK(hopf_by_name("fS3").dim() == 6);
        CHECK(hopf_by_name("kC2xC2").dim() == 4);
        CHECK(hopf_by_name("KZ:4").dim() == windowed_kz(4).dim());
        CHECK(group_by_name("D4").size() == 8);
        CHECK(group_by_name("K4").size() == 4);
        CHECK(pack_by_name("fS3").left_action.has_value());
        CHECK(pack_by_name("kS3").left_coaction.has_value());
        CHECK(pack_by_name("composite:S3").alg.dim() == 36);
        CHECK(twist_by_name("flip:kC2,kC2").a.dim() == 2);
        for (const char* bad : {"kQ7", "S", "xyz", "KZ:abc", "D(", "fS9"}) CHECK_THROWS_AS(hopf_by_name(bad), InputError);
        CHECK_THROWS_AS(twist_by_name("flip:kC2"), InputError);
        CHECK_THROWS_AS(pack_by_name("nope:S3"), InputError);
        for (const auto& [kind, name] : catalog_examples()) {
            if (kind == "hopf") CHECK_NOTHROW(hopf_by_name(name));
            if (kind == "pack") CHECK_NOTHROW(pack_by_name(name));
            if (kind == "twist") CHECK_NOTHROW(twist_by_name(name));
        }
    }

    TEST_CASE("catalog twist pairs satisfy the axioms") {
        Group s3 = Group::symmetric(3);
        for (const auto& tp : {translation_twist(s3), adjoint_smash_twist(s3), conjugation_twist(s3), reflection_twist(4)}) {
            auto v = check_twist_axioms(tp);
            CHECK_MESSAGE(v.pass(), tp.name, v.summary());
        }
    }

    TEST_CASE("D(G) is a certified Hopf algebra with Δ(δ_x⋆g) = Σ_{ab=x} δ_a⋆g ⊗ δ_b⋆g") {
        for (const char* name : {"D(C2)", "D(S3)"}) {
            Hopf d = hopf_by_name(name);
            auto v = certify_hopf(d);
            CHECK_MESSAGE(v.pass(), name, v.summary());
        }
        Group s3 = Group::symmetric(3);
        Hopf d = hopf_by_name("D(S3)");
        const Index n = 6, dim = 36;
        for (Index x = 0; x < n; ++x)
            for (Index g = 0; g < n; ++g) {
                std::vector<Term> expect;
                for (Index a = 0; a < n; ++a) {
                    Index b = s3.mul(s3.inv(a), x);
                    expect.push_back({(a * n + g) * dim + b * n + g, Scalar(1)});
                }
                CHECK(d.delta().column(x * n + g) == SparseVec::from_terms(expect));
            }
    }
}
