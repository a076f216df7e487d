#include <doctest.h>

#include <random>

#include <gmpxx.h>

#include "mhforge/echelon.hpp"
#include "mhforge/linear_map.hpp"
#include "mhforge/parallel.hpp"

using namespace mhf;

namespace {

// dense exact rank, independent of the sparse echelon
std::size_t dense_rank(std::vector<std::vector<mpq_class>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

Space basis(const std::string& name, int n) {
    std::vector<std::string> l;
    for (int i = 0; i < n; ++i) l.push_back(name + std::to_string(i));
    return Space::basis(name, l);
}

LinearMap random_map(const Space& s, const Space& t, std::mt19937& rng, int density = 3) {
    std::uniform_int_distribution<int> coef(-3, 3), pick(0, density);
    std::vector<SparseVec> cols;
    for (Index j = 0; j < s.dim(); ++j) {
        std::vector<Term> terms;
        for (Index i = 0; i < t.dim(); ++i)
            if (pick(rng) == 0) terms.push_back({i, Scalar(coef(rng))});
        cols.push_back(SparseVec::from_terms(terms));
    }
    return LinearMap::from_columns(s, t, cols);
}

}  // namespace

TEST_SUITE("linalg") {
    TEST_CASE("rational arithmetic stays exact across the overflow boundary") {
        Rational big(INT64_MAX);
        Rational sq = big * big;
        CHECK_FALSE(sq.is_small());
        CHECK(sq / big == big);
        CHECK((sq / big).is_small());
        CHECK(Rational(6, -4) == Rational(-3, 2));
        CHECK(Rational::parse("-10/4").str() == "-5/2");
        CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
        mpq_class oracle = mpq_class(INT64_MAX) * mpq_class(INT64_MAX) + mpq_class(1, 7);
        CHECK((sq + Rational(1, 7)).to_mpq() == oracle);
    }

    TEST_CASE("gaussian scalars parse and print") {
        CHECK(Scalar::parse("1/2+3/4i") == Scalar(Rational(1, 2), Rational(3, 4)));
        CHECK(Scalar::parse("-i") == Scalar(0, -1));
        CHECK(Scalar::parse("2i").str() == "2i");
        CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
        Scalar z(Rational(3), Rational(4));
        CHECK(z * z.inverse() == Scalar(1));
        CHECK((z * z.conj()) == Scalar(25));
        CHECK(Scalar::parse(Scalar(Rational(-2, 3), Rational(5, 7)).str()) == Scalar(Rational(-2, 3), Rational(5, 7)));
    }

    TEST_CASE("tensor spaces flatten and index lexicographically") {
        Space a = basis("a", 2), b = basis("b", 3), c = basis("c", 2);
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * Space()) == a);
        Space t = a * b * c;
        CHECK(t.dim() == 12);
        CHECK(t.arity() == 3);
        CHECK(t.label(0) == "(a0,b0,c0)");
        CHECK(t.label(11) == "(a1,b2,c1)");
        auto parts = t.split(7);
        CHECK(parts == std::vector<std::uint32_t>{1, 0, 1});
        CHECK(t.join(parts) == 7);
    }

    TEST_CASE("sparse vectors merge and drop zeros") {
        auto v = SparseVec::from_terms({{3, Scalar(1)}, {1, Scalar(2)}, {3, Scalar(-1)}});
        CHECK(v.size() == 1);
        CHECK(v.coeff(1) == Scalar(2));
        auto w = SparseVec::tensor(SparseVec::unit(1, Scalar(2)), SparseVec::unit(2, Scalar(3)), 4);
        CHECK(w == SparseVec::unit(6, Scalar(6)));
    }

    TEST_CASE("lazy composition and tensor agree with materialized products") {
        std::mt19937 rng(7);
        Space a = basis("a", 3), b = basis("b", 4), c = basis("c", 2);
        auto f = random_map(b, c, rng), g = random_map(a, b, rng);
        auto fg = compose(f, g);
        auto fg_stored = fg.materialize();
        CHECK(equal_maps(fg, fg_stored));
        for (Index j = 0; j < a.dim(); ++j) CHECK(fg.column(j) == f.apply(g.column(j)));
        auto t = tensor(f, g);
        for (Index i = 0; i < (b * a).dim(); ++i)
            CHECK(t.column(i) == SparseVec::tensor(f.column(i / 3), g.column(i % 3), b.dim()));
    }

    TEST_CASE("permutations and leg embeddings") {
        Space a = basis("a", 2), b = basis("b", 3);
        auto tau = flip_map(a, b);
        CHECK(tau.column(0 * 3 + 2) == SparseVec::unit(2 * 2 + 0));  // (a0,b2) -> (b2,a0)
        auto p = permute_blocks({a, b, a}, {2, 0, 1});
        // source (x, y, z) -> target (z, x, y)
        Space src = a * b * a, tgt = a * a * b;
        std::uint32_t s_parts[] = {1, 2, 0}, t_parts[] = {0, 1, 2};
        CHECK(p.column(src.join(s_parts)) == SparseVec::unit(tgt.join(t_parts)));

        std::mt19937 rng(3);
        auto m = random_map(a * a, a, rng, 1);
        auto e = embed_leg(m, {0, 2}, {a, b, a});
        CHECK(e.tgt() == a * b);
        for (Index i = 0; i < src.dim(); ++i) {
            auto pp = src.split(i);
            auto col = m.column(pp[0] * 2 + pp[2]);
            Accumulator acc;
            for (const auto& t : col) acc.add(t.idx * 3 + pp[1], t.c);
            CHECK(e.column(i) == acc.take());
        }
    }

    TEST_CASE("echelon rank matches a dense oracle on random maps") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 25; ++trial) {
            Space s = basis("s", 2 + trial % 5), t = basis("t", 2 + (trial * 3) % 6);
            auto m = random_map(s, t, rng, trial % 3 + 1);
            std::vector<std::vector<mpq_class>> dense(t.dim(), std::vector<mpq_class>(s.dim()));
            for (Index j = 0; j < s.dim(); ++j)
                for (const auto& term : m.column(j)) dense[term.idx][j] = term.c.re().to_mpq();
            auto r = map_rank(m);
            CHECK(r.rank == dense_rank(dense));
            if (r.rank < s.dim()) {
                REQUIRE(r.kernel_witness);
                CHECK_FALSE(r.kernel_witness->empty());
                CHECK(m.apply(*r.kernel_witness).empty());
            }
            CHECK(kernel_basis(m).size() == s.dim() - r.rank);
        }
    }

    TEST_CASE("inverse and solve") {
        Space s = basis("s", 3);
        auto m = LinearMap::from_columns(s, s, {SparseVec::from_terms({{0, Scalar(2)}, {1, Scalar(1)}}),
                                                SparseVec::unit(1), SparseVec::from_terms({{0, Scalar(1)}, {2, Scalar(-1)}})});
        auto inv = map_inverse(m);
        CHECK(equal_maps(compose(m, inv), LinearMap::identity(s)));
        CHECK(equal_maps(compose(inv, m), LinearMap::identity(s)));
        auto y = SparseVec::from_terms({{0, Scalar(5)}, {2, Scalar(1)}});
        auto x = solve(m, y);
        REQUIRE(x);
        CHECK(m.apply(*x) == y);

        auto sing = LinearMap::from_columns(s, s, {SparseVec::unit(0), SparseVec::unit(0), SparseVec::unit(2)});
        try {
            map_inverse(sing);
            FAIL("singular map inverted");
        } catch (const SingularMap& e) {
            CHECK_FALSE(e.witness().is_zero());
            CHECK(sing.apply(e.witness().vec).empty());
        }
    }

    TEST_CASE("partial maps refuse undefined columns") {
        Space s = basis("s", 2);
        auto m = LinearMap::from_columns(s, s, {SparseVec::unit(0), SparseVec::unit(1)}, {false, true});
        CHECK(m.defined(0));
        CHECK_FALSE(m.defined(1));
        CHECK_THROWS_AS(m.column(1), WindowOverflow);
    }

    TEST_CASE("first failure is independent of the thread count") {
        auto pred = [](std::uint64_t i) { return i % 977 == 500 || i == 9000; };
        set_thread_count(1);
        auto one = first_failure(20000, pred);
        set_thread_count(4);
        auto four = first_failure(20000, pred);
        set_thread_count(0);
        REQUIRE(one);
        CHECK(*one == 500);
        CHECK(one == four);
    }
}
