#include <doctest.h>

#include "mhforge/catalog.hpp"
#include "mhforge/ids.hpp"

using namespace mhf;

namespace {

Algebra corrupt(const Algebra& a, Index i, Index j, Index k, Scalar delta) {
    Algebra::Data d = a.data();
    d.table[i * a.dim() + j] = d.table[i * a.dim() + j].axpy(delta, SparseVec::unit(k));
    return Algebra(std::move(d));
}

// two-dimensional algebra {e, n}: e² = e, everything else zero; n annihilates
Algebra degenerate_pair() {
    Algebra::Data d;
    d.name = "degenerate";
    d.space = Space::basis("deg", {"e", "n"});
    d.table = {SparseVec::unit(0), {}, {}, {}};
    return Algebra(std::move(d));
}

}  // namespace

TEST_SUITE("algebra") {
    TEST_CASE("group algebras and function algebras are associative, unital, nondegenerate") {
        for (const auto& g : {Group::cyclic(2), Group::symmetric(3), Group::dihedral(4)}) {
            CHECK(check_group(g).pass);
            auto v = check_algebra(group_algebra(g).alg());
            CHECK_MESSAGE(v.pass(), v.summary());
            auto w = check_algebra(function_algebra(g).alg());
            CHECK_MESSAGE(w.pass(), w.summary());
        }
    }

    TEST_CASE("corrupting one structure constant yields an associativity witness") {
        Algebra a = group_algebra(Group::symmetric(3)).alg();
        Algebra bad = corrupt(a, 1, 2, 0, Scalar(1));
        auto c = check_associative(bad, ids::assoc);
        CHECK_FALSE(c.pass);
        REQUIRE(c.witness);
        CHECK(c.witness->tuple.size() == 3);
        CHECK(c.witness->lhs != c.witness->rhs);
    }

    TEST_CASE("annihilator witness on a degenerate product") {
        auto c = check_nondegenerate(degenerate_pair(), ids::nondegenerate);
        CHECK_FALSE(c.pass);
        REQUIRE(c.witness);
        CHECK(c.witness->tuple.front().find("n") != std::string::npos);
    }

    TEST_CASE("unit and star laws") {
        Algebra kg = group_algebra(Group::symmetric(3)).alg();
        CHECK(check_unit(kg, ids::unit).pass);
        CHECK(check_star(kg, ids::star).pass);
        // g ↦ g is not an anti-automorphism of a noncommutative group algebra
        std::vector<SparseVec> wrong;
        for (Index i = 0; i < kg.dim(); ++i) wrong.push_back(SparseVec::unit(i));
        CHECK_FALSE(check_star(kg.with_star(wrong), ids::star).pass);
    }

    TEST_CASE("tensor and opposite algebras") {
        Algebra a = group_algebra(Group::symmetric(3)).alg();
        Algebra op = opposite_algebra(a);
        for (Index i = 0; i < a.dim(); ++i)
            for (Index j = 0; j < a.dim(); ++j) CHECK(op.product(i, j) == a.product(j, i));
        Algebra t = tensor_algebra(a, function_algebra(Group::cyclic(2)).alg());
        CHECK(t.dim() == 12);
        CHECK(check_algebra(t).pass());
    }

    TEST_CASE("local units for finitely supported elements") {
        Hopf kz = windowed_kz(4);
        const Algebra& a = kz.alg();
        std::vector<SparseVec> elems{SparseVec::from_terms({{kz_index(4, -2), Scalar(3)}, {kz_index(4, 1), Scalar(-1)}}),
                                     SparseVec::unit(kz_index(4, 4))};
        auto lu = find_local_units(a, elems);
        for (const auto& x : elems) {
            CHECK(a.mul(lu.left, x) == x);
            CHECK(a.mul(x, lu.right) == x);
        }
    }

    TEST_CASE("multipliers compose and unit multiplier is the identity") {
        Algebra a = group_algebra(Group::symmetric(3)).alg();
        auto x = Multiplier::from_element(a, SparseVec::unit(1));
        auto y = Multiplier::from_element(a, SparseVec::unit(3));
        CHECK(check_multiplier(x, ids::multiplier).pass);
        auto xy = multiplier_product(x, y);
        CHECK(equal_multipliers(xy, Multiplier::from_element(a, a.product(1, 3))));
        CHECK(equal_multipliers(multiplier_product(Multiplier::identity(a), x), x));
        auto back = multiplier_to_element(xy);
        REQUIRE(back);
        CHECK(*back == a.product(1, 3));
    }
}
