#include "mhforge/algebra.hpp"

#include <numeric>

#include "mhforge/echelon.hpp"
#include "mhforge/error.hpp"
#include "mhforge/parallel.hpp"

namespace mhf {

namespace {

std::vector<std::string> labels_of(const Space& s, std::initializer_list<Index> idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(s.label(i));
    return out;
}

// Σ c_k e_k e_z
SparseVec right_by_basis(const Algebra& a, const SparseVec& v, Index z) {
    if (v.size() == 1) {
        const auto& t = v[0];
        return t.c.is_one() ? a.product(t.idx, z) : a.product(t.idx, z).scaled(t.c);
    }
    Accumulator acc;
    for (const auto& t : v) acc.add(a.product(t.idx, z), t.c);
    return acc.take();
}

// Σ c_k e_x e_k
SparseVec left_by_basis(const Algebra& a, Index x, const SparseVec& v) {
    if (v.size() == 1) {
        const auto& t = v[0];
        return t.c.is_one() ? a.product(x, t.idx) : a.product(x, t.idx).scaled(t.c);
    }
    Accumulator acc;
    for (const auto& t : v) acc.add(a.product(x, t.idx), t.c);
    return acc.take();
}

}  // namespace

Algebra::Algebra(Data d) {
    Index n = d.space.dim();
    if (d.table.size() != n * n) throw InputError("structure table of " + d.name + " has wrong size");
    for (const auto& v : d.table)
        if (!v.empty() && v.terms().back().idx >= n) throw InputError("structure constant outside basis of " + d.name);
    if (d.unit && d.local_units == LocalUnitStrategy::None) d.local_units = LocalUnitStrategy::Unital;
    if (d.star && d.star->size() != n) throw InputError("involution of " + d.name + " has wrong size");
    d_ = std::make_shared<const Data>(std::move(d));
    if (!d_->domain) {
        auto all = std::make_shared<std::vector<Index>>(n);
        std::iota(all->begin(), all->end(), Index{0});
        full_domain_ = std::move(all);
    }
}

Algebra Algebra::from_product(std::string name, const Space& space, const LinearMap& mul) {
    if (!(mul.src() == space * space) || !(mul.tgt() == space)) throw InputError("product map has wrong shape");
    Data d;
    d.name = std::move(name);
    d.space = space;
    d.table = parallel_map<SparseVec>(space.dim() * space.dim(), [&](Index i) { return mul.column(i); });
    return Algebra(std::move(d));
}

const std::vector<Index>& Algebra::domain() const { return d_->domain ? *d_->domain : *full_domain_; }

SparseVec Algebra::mul(const SparseVec& a, const SparseVec& b) const {
    Accumulator acc;
    for (const auto& x : a)
        for (const auto& y : b) acc.add(product(x.idx, y.idx), x.c * y.c);
    return acc.take();
}

Element Algebra::mul(const Element& a, const Element& b) const {
    if (!(a.space == space()) || !(b.space == space()))
        throw InputError("multiply: element not in algebra " + name());
    return {space(), mul(a.vec, b.vec)};
}

LinearMap Algebra::mul_map() const {
    auto d = d_;
    return LinearMap::from_fn(space() * space(), space(), [d](Index i) { return d->table[i]; });
}

LinearMap Algebra::left_mult(const SparseVec& a) const {
    Algebra self = *this;
    return LinearMap::from_fn(space(), space(), [self, a](Index j) { return self.mul(a, SparseVec::unit(j)); })
        .materialize();
}

LinearMap Algebra::right_mult(const SparseVec& a) const {
    Algebra self = *this;
    return LinearMap::from_fn(space(), space(), [self, a](Index j) { return self.mul(SparseVec::unit(j), a); })
        .materialize();
}

const SparseVec& Algebra::unit() const {
    if (!d_->unit) throw MathError("algebra " + name() + " has no unit");
    return *d_->unit;
}

LinearMap Algebra::unit_map() const { return LinearMap::from_columns(Space::ground(), space(), {unit()}); }

SparseVec Algebra::star(const SparseVec& a) const {
    if (!d_->star) throw MathError("algebra " + name() + " has no involution");
    Accumulator acc;
    for (const auto& t : a) acc.add((*d_->star)[t.idx], t.c.conj());
    return acc.take();
}

Algebra Algebra::renamed(std::string name) const {
    Data d = *d_;
    d.name = std::move(name);
    return Algebra(std::move(d));
}

Algebra Algebra::with_unit(std::optional<SparseVec> unit) const {
    Data d = *d_;
    d.unit = std::move(unit);
    if (!d.unit && d.local_units == LocalUnitStrategy::Unital) d.local_units = LocalUnitStrategy::None;
    return Algebra(std::move(d));
}

Algebra Algebra::with_star(std::optional<std::vector<SparseVec>> star) const {
    Data d = *d_;
    d.star = std::move(star);
    return Algebra(std::move(d));
}

bool same_table(const Algebra& a, const Algebra& b) { return a.space() == b.space() && a.d_->table == b.d_->table; }

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
    Algebra::Data d;
    d.name = a.name() + "⊗" + b.name();
    d.space = a.space() * b.space();
    Index na = a.dim(), nb = b.dim(), n = na * nb;
    d.table.resize(n * n);
    for (Index u = 0; u < n; ++u)
        for (Index v = 0; v < n; ++v)
            d.table[u * n + v] = SparseVec::tensor(a.product(u / nb, v / nb), b.product(u % nb, v % nb), nb);
    if (a.unital() && b.unital()) d.unit = SparseVec::tensor(a.unit(), b.unit(), nb);
    if (a.has_star() && b.has_star()) {
        std::vector<SparseVec> st(n);
        for (Index u = 0; u < n; ++u)
            st[u] = SparseVec::tensor(a.star(SparseVec::unit(u / nb)), b.star(SparseVec::unit(u % nb)), nb);
        d.star = std::move(st);
    }
    d.field = (a.field() == Field::Gaussian || b.field() == Field::Gaussian) ? Field::Gaussian : Field::Rational;
    if (a.local_unit_strategy() == LocalUnitStrategy::Unital && b.local_unit_strategy() == LocalUnitStrategy::Unital)
        d.local_units = LocalUnitStrategy::Unital;
    if (a.restricted() || b.restricted()) {
        std::vector<Index> dom;
        for (auto x : a.domain())
            for (auto y : b.domain()) dom.push_back(x * nb + y);
        d.domain = std::move(dom);
    }
    return Algebra(std::move(d));
}

Algebra opposite_algebra(const Algebra& a) {
    Algebra::Data d = a.data();
    d.name = a.name() + "^op";
    Index n = a.dim();
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) d.table[i * n + j] = a.product(j, i);
    return Algebra(std::move(d));
}

Condition compare_tables(const std::string& id, const std::string& description, const Algebra& lhs, const Algebra& rhs) {
    if (!(lhs.space() == rhs.space()))
        return fail_condition(id, description, Witness{id, {}, lhs.space().name(), rhs.space().name(), "different spaces"});
    Index n = lhs.dim();
    auto hit = first_failure(n * n, [&](Index p) { return !(lhs.product(p / n, p % n) == rhs.product(p / n, p % n)); });
    if (!hit) return pass_condition(id, description, n * n);
    Index x = *hit / n, y = *hit % n;
    return fail_condition(id, description,
                          Witness{id, labels_of(lhs.space(), {x, y}), format_vec(lhs.space(), lhs.product(x, y)),
                                  format_vec(rhs.space(), rhs.product(x, y)), "structure constants differ"});
}

Condition check_associative(const Algebra& a, const std::string& id) {
    const std::string desc = "associativity (xy)z = x(yz) on basis triples of " + a.name();
    return guarded(id, desc, [&] {
        const auto& dom = a.domain();
        Index m = dom.size();
        std::vector<Index> bad_z(m * m, m);
        auto hit = first_failure(m * m, [&](Index p) {
            Index x = dom[p / m], y = dom[p % m];
            const SparseVec& xy = a.product(x, y);
            for (Index k = 0; k < m; ++k) {
                Index z = dom[k];
                if (!(right_by_basis(a, xy, z) == left_by_basis(a, x, a.product(y, z)))) {
                    bad_z[p] = k;
                    return true;
                }
            }
            return false;
        });
        if (!hit) return pass_condition(id, desc, m * m * m);
        Index x = dom[*hit / m], y = dom[*hit % m], z = dom[bad_z[*hit]];
        return fail_condition(id, desc,
                              Witness{id, labels_of(a.space(), {x, y, z}),
                                      format_vec(a.space(), right_by_basis(a, a.product(x, y), z)),
                                      format_vec(a.space(), left_by_basis(a, x, a.product(y, z))), "(xy)z vs x(yz)"});
    });
}

Condition check_unit(const Algebra& a, const std::string& id) {
    const std::string desc = "unit law 1a = a = a1 in " + a.name();
    if (!a.unital()) return fail_condition(id, desc, Witness{id, {}, "", "", "no unit"});
    for (auto x : a.domain()) {
        SparseVec e = SparseVec::unit(x);
        SparseVec l = a.mul(a.unit(), e), r = a.mul(e, a.unit());
        if (!(l == e)) return fail_condition(id, desc, Witness{id, {a.space().label(x)}, format_vec(a.space(), l), a.space().label(x), "1a"});
        if (!(r == e)) return fail_condition(id, desc, Witness{id, {a.space().label(x)}, format_vec(a.space(), r), a.space().label(x), "a1"});
    }
    return pass_condition(id, desc, a.domain().size());
}

Condition check_star(const Algebra& a, const std::string& id) {
    const std::string desc = "involution: (ab)* = b*a*, a** = a in " + a.name();
    if (!a.has_star()) return fail_condition(id, desc, Witness{id, {}, "", "", "no involution"});
    const auto& dom = a.domain();
    for (auto x : dom) {
        SparseVec e = SparseVec::unit(x);
        SparseVec back = a.star(a.star(e));
        if (!(back == e))
            return fail_condition(id, desc, Witness{id, {a.space().label(x)}, format_vec(a.space(), back), a.space().label(x), "a**"});
    }
    Index m = dom.size();
    auto hit = first_failure(m * m, [&](Index p) {
        Index x = dom[p / m], y = dom[p % m];
        return !(a.star(a.product(x, y)) == a.mul(a.star(SparseVec::unit(y)), a.star(SparseVec::unit(x))));
    });
    if (!hit) return pass_condition(id, desc, m * m);
    Index x = dom[*hit / m], y = dom[*hit % m];
    return fail_condition(id, desc,
                          Witness{id, labels_of(a.space(), {x, y}), format_vec(a.space(), a.star(a.product(x, y))),
                                  format_vec(a.space(), a.mul(a.star(SparseVec::unit(y)), a.star(SparseVec::unit(x)))),
                                  "(ab)* vs b*a*"});
}

Condition check_nondegenerate(const Algebra& a, const std::string& id) {
    const std::string desc = "nondegenerate product of " + a.name();
    const auto& dom = a.domain();
    Index n = a.dim();
    Space blocks = a.space() * a.space();
    for (int side = 0; side < 2; ++side) {
        // a ↦ Σ_j (a e_j or e_j a) placed in block j
        auto stacked = LinearMap::from_fn(a.space(), blocks, [&, side](Index i) {
            std::vector<Term> out;
            for (auto j : dom)
                for (const auto& t : side == 0 ? a.product(i, j) : a.product(j, i)) out.push_back({j * n + t.idx, t.c});
            return SparseVec::from_terms(std::move(out));
        });
        auto r = map_rank(stacked, &dom);
        if (r.kernel_witness)
            return fail_condition(id, desc,
                                  Witness{id, {format_vec(a.space(), *r.kernel_witness)}, "0", "0",
                                          side == 0 ? "x e_j = 0 for every basis e_j" : "e_j x = 0 for every basis e_j"});
    }
    return pass_condition(id, desc, dom.size() * dom.size());
}

Verdict check_algebra(const Algebra& a) {
    Verdict v("algebra " + a.name());
    v.add(check_associative(a, "assoc"));
    if (a.unital()) v.add(check_unit(a, "unit"));
    if (a.has_star()) v.add(check_star(a, "star"));
    v.add(check_nondegenerate(a, "nondegenerate"));
    return v;
}

LocalUnits find_local_units(const Algebra& a, const std::vector<SparseVec>& elements) {
    if (elements.empty()) return {};
    LocalUnits lu;
    switch (a.local_unit_strategy()) {
        case LocalUnitStrategy::Unital:
            lu = {a.unit(), a.unit()};
            break;
        case LocalUnitStrategy::Idempotents: {
            std::vector<Term> t;
            for (const auto& s : elements)
                for (const auto& x : s) t.push_back({x.idx, Scalar(1)});
            std::sort(t.begin(), t.end(), [](const Term& p, const Term& q) { return p.idx < q.idx; });
            t.erase(std::unique(t.begin(), t.end(), [](const Term& p, const Term& q) { return p.idx == q.idx; }), t.end());
            SparseVec e = SparseVec::from_terms(std::move(t));
            lu = {e, e};
            break;
        }
        case LocalUnitStrategy::None:
            throw MathError("no local-unit strategy for algebra " + a.name());
    }
    for (const auto& s : elements)
        if (!(a.mul(lu.left, s) == s) || !(a.mul(s, lu.right) == s))
            throw MathError("local-unit strategy failed for " + format_vec(a.space(), s));
    return lu;
}

Multiplier Multiplier::identity(const Algebra& a) {
    return {a, LinearMap::identity(a.space()), LinearMap::identity(a.space())};
}

Multiplier Multiplier::from_element(const Algebra& a, const SparseVec& x) { return {a, a.left_mult(x), a.right_mult(x)}; }

Condition check_multiplier(const Multiplier& m, const std::string& id) {
    const Algebra& a = m.alg;
    const std::string desc = "multiplier compatibility m2(a)b = a m1(b) in " + a.name();
    return guarded(id, desc, [&] {
        const auto& dom = a.domain();
        Index k = dom.size();
        auto lhs = [&](Index x, Index y) { return a.mul(m.right.column(x), SparseVec::unit(y)); };
        auto rhs = [&](Index x, Index y) { return a.mul(SparseVec::unit(x), m.left.column(y)); };
        auto hit = first_failure(k * k, [&](Index p) { return !(lhs(dom[p / k], dom[p % k]) == rhs(dom[p / k], dom[p % k])); });
        if (!hit) return pass_condition(id, desc, k * k);
        Index x = dom[*hit / k], y = dom[*hit % k];
        return fail_condition(id, desc, Witness{id, labels_of(a.space(), {x, y}), format_vec(a.space(), lhs(x, y)),
                                                format_vec(a.space(), rhs(x, y)), ""});
    });
}

Multiplier multiplier_product(const Multiplier& m, const Multiplier& n) {
    if (!(m.alg.space() == n.alg.space())) throw InputError("multipliers of different algebras");
    return {m.alg, compose(m.left, n.left).materialize(), compose(n.right, m.right).materialize()};
}

Multiplier multiplier_star(const Multiplier& m) {
    const Algebra& a = m.alg;
    if (!a.has_star()) throw MathError("algebra " + a.name() + " has no involution");
    auto conj_of = [&a](const LinearMap& f) {
        return LinearMap::from_fn(a.space(), a.space(), [a, f](Index i) {
                   return a.star(f.apply(a.star(SparseVec::unit(i))));
               }).materialize();
    };
    return {a, conj_of(m.right), conj_of(m.left)};
}

bool equal_multipliers(const Multiplier& m, const Multiplier& n) {
    const auto& dom = m.alg.domain();
    return !first_difference(m.left, n.left, &dom) && !first_difference(m.right, n.right, &dom);
}

std::optional<SparseVec> multiplier_to_element(const Multiplier& m) {
    if (!m.alg.unital()) return std::nullopt;
    SparseVec x = m.left.apply(m.alg.unit());
    if (!equal_multipliers(m, Multiplier::from_element(m.alg, x))) return std::nullopt;
    return x;
}

}  // namespace mhf
