#include "mhforge/hopf.hpp"

#include "mhforge/echelon.hpp"
#include "mhforge/error.hpp"
#include "mhforge/ids.hpp"
#include "mhforge/parallel.hpp"

namespace mhf {

namespace {

std::vector<Index> product_domain(const std::vector<std::vector<Index>>& parts, const std::vector<Index>& dims) {
    std::vector<Index> out{0};
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::vector<Index> next;
        next.reserve(out.size() * parts[k].size());
        for (auto p : out)
            for (auto q : parts[k]) next.push_back(p * dims[k] + q);
        out = std::move(next);
    }
    return out;
}

std::vector<Index> power_domain(const Algebra& a, std::size_t k) {
    return product_domain(std::vector<std::vector<Index>>(k, a.domain()), std::vector<Index>(k, a.dim()));
}

// bijectivity of a map on A⊗A restricted to the check domain: injective on
// domain columns, and every domain target reachable from defined columns.
Condition check_bijective(const std::string& id, const std::string& desc, const LinearMap& m, const Algebra& a) {
    return guarded(id, desc, [&]() -> Condition {
        auto dom = power_domain(a, 2);
        auto r = map_rank(m, &dom);
        if (r.kernel_witness)
            return fail_condition(id, desc, Witness{id, {format_vec(m.src(), *r.kernel_witness)}, "0", "0", "kernel element"});
        if (!a.restricted()) return pass_condition(id, desc, dom.size());
        Echelon ech;
        for (Index c = 0; c < m.src().dim(); ++c)
            if (m.defined(c)) ech.insert(m.column(c), SparseVec::unit(c));
        for (auto t : dom)
            if (!ech.express(SparseVec::unit(t)))
                return fail_condition(id, desc,
                                      Witness{id, m.tgt().label_tuple(t), "", "", "not in the image of the window"});
        return pass_condition(id, desc, dom.size());
    });
}

}  // namespace

Hopf Hopf::from_delta(const Algebra& alg, const LinearMap& delta, const LinearMap& counit, const LinearMap& antipode,
                      std::optional<LinearMap> antipode_inv) {
    const Space& s = alg.space();
    LinearMap m = alg.mul_map();
    CoStructure co;
    co.delta = delta.materialize();
    co.t1 = compose(embed_leg(m, {1, 2}, {s, s, s}), tensor(*co.delta, LinearMap::identity(s))).materialize();
    co.t2 = compose(embed_leg(m, {0, 1}, {s, s, s}), tensor(LinearMap::identity(s), *co.delta)).materialize();
    co.counit = counit.materialize();
    co.antipode = antipode.materialize();
    if (antipode_inv) co.antipode_inv = antipode_inv->materialize();
    return Hopf(alg, std::move(co));
}

const LinearMap& Hopf::delta() const {
    if (!co_.delta) throw MathError(name() + " is not unital: Δ exists only in covered form");
    return *co_.delta;
}

LinearMap Hopf::antipode_inverse() const {
    if (co_.antipode_inv) return *co_.antipode_inv;
    if (alg_.restricted()) throw MathError("antipode inverse of " + name() + " must be supplied");
    return map_inverse(co_.antipode);
}

Scalar Hopf::counit(Index i) const { return co_.counit.column(i).coeff(0); }

Hopf Hopf::renamed(std::string name) const { return Hopf(alg_.renamed(std::move(name)), co_); }

Hopf Hopf::with_antipode_inverse(LinearMap inv) const {
    CoStructure co = co_;
    co.antipode_inv = std::move(inv);
    return Hopf(alg_, std::move(co));
}

LinearMap delta_map(const Hopf& h) { return h.delta(); }

Hopf coopposite(const Hopf& h) {
    const Space& s = h.space();
    LinearMap sinv = h.antipode_inverse();
    return Hopf::from_delta(h.alg().renamed(h.name() + "^cop"), compose(flip_map(s, s), h.delta()), h.co().counit, sinv,
                            h.antipode());
}

Hopf opposite(const Hopf& h) {
    LinearMap sinv = h.antipode_inverse();
    Algebra op = opposite_algebra(h.alg());
    return Hopf::from_delta(op, h.delta(), h.co().counit, sinv, h.antipode());
}

Hopf tensor_hopf(const Hopf& a, const Hopf& b) {
    Algebra ab = tensor_algebra(a.alg(), b.alg());
    const Space &sa = a.space(), &sb = b.space();
    LinearMap mid = permute_blocks({sa, sb, sa, sb}, {0, 2, 1, 3});
    LinearMap back = permute_blocks({sa, sa, sb, sb}, {0, 2, 1, 3});
    CoStructure co;
    co.t1 = compose({back, tensor(a.co().t1, b.co().t1), mid}).materialize();
    co.t2 = compose({back, tensor(a.co().t2, b.co().t2), mid}).materialize();
    co.counit = tensor(a.co().counit, b.co().counit).materialize();
    co.antipode = tensor(a.antipode(), b.antipode()).materialize();
    if (a.co().antipode_inv && b.co().antipode_inv)
        co.antipode_inv = tensor(*a.co().antipode_inv, *b.co().antipode_inv).materialize();
    if (a.unital() && b.unital()) co.delta = compose(back, tensor(a.delta(), b.delta())).materialize();
    return Hopf(ab, std::move(co));
}

Verdict check_comultiplication(const Hopf& h) {
    Verdict v("comultiplication of " + h.name());
    const Algebra& a = h.alg();
    const Space& s = a.space();
    const auto id = LinearMap::identity(s);
    const LinearMap m = a.mul_map();
    auto d2 = power_domain(a, 2);
    auto d3 = power_domain(a, 3);

    {
        const std::string desc = "t1, t2 land in A⊗A on the check domain";
        Condition c = pass_condition(ids::cover_defined, desc, d2.size());
        for (auto t : d2) {
            if (!h.co().t1.defined(t) || !h.co().t2.defined(t)) {
                c = fail_condition(ids::cover_defined, desc, Witness{ids::cover_defined, (s * s).label_tuple(t), "", "", "outside the window"});
                break;
            }
        }
        v.add(c);
    }
    // Δ multiplicative, covered: t1(xy⊗z) = (m⊗id) t1_13 t1_23 (x⊗y⊗z)
    v.add(check_equal(ids::delta_multiplicative, "Δ(xy)(1⊗z) = Δ(x)Δ(y)(1⊗z) through t1",
                      compose(h.co().t1, tensor(m, id)),
                      compose({embed_leg(m, {0, 1}, {s, s, s}), embed_leg(h.co().t1, {0, 2}, {s, s, s}),
                               embed_leg(h.co().t1, {1, 2}, {s, s, s})}),
                      &d3));
    v.add(check_equal(ids::delta_multiplicative, "(x⊗1)Δ(yz) = (x⊗1)Δ(y)Δ(z) through t2",
                      compose(h.co().t2, tensor(id, m)),
                      compose({embed_leg(m, {1, 2}, {s, s, s}), embed_leg(h.co().t2, {0, 2}, {s, s, s}),
                               embed_leg(h.co().t2, {0, 1}, {s, s, s})}),
                      &d3));
    if (h.unital()) {
        const LinearMap& d = h.delta();
        LinearMap m2 = compose(tensor(m, m), permute_blocks({s, s, s, s}, {0, 2, 1, 3}));
        v.add(check_equal(ids::delta_multiplicative, "Δ(xy) = Δ(x)Δ(y)", compose(d, m), compose(m2, tensor(d, d)), &d2));
    }
    v.add(check_equal(ids::coassoc, "(t2⊗id)(id⊗t1) = (id⊗t1)(t2⊗id)",
                      compose(tensor(h.co().t2, id), tensor(id, h.co().t1)),
                      compose(tensor(id, h.co().t1), tensor(h.co().t2, id)), &d3));
    return v;
}

Verdict check_multiplier_hopf(const Hopf& h) {
    Verdict v("multiplier Hopf contract of " + h.name());
    const Algebra& a = h.alg();
    const Space& s = a.space();
    const auto id = LinearMap::identity(s);
    const LinearMap m = a.mul_map();
    const LinearMap& eps = h.co().counit;
    const LinearMap& S = h.antipode();
    auto d2 = power_domain(a, 2);

    v.add(check_nondegenerate(a, ids::nondegenerate));
    v.add(check_bijective(ids::t1_bijective, "t1 bijective", h.co().t1, a));
    v.add(check_bijective(ids::t2_bijective, "t2 bijective", h.co().t2, a));
    v.add(check_equal(ids::counit_t1, "(ε⊗id)t1(a⊗b) = ab", compose(tensor(eps, id), h.co().t1), m, &d2));
    v.add(check_equal(ids::counit_t2, "(id⊗ε)t2(a⊗b) = ab", compose(tensor(id, eps), h.co().t2), m, &d2));
    v.add(check_equal(ids::counit_multiplicative, "ε(ab) = ε(a)ε(b)", compose(eps, m), tensor(eps, eps), &d2));
    v.add(check_equal(ids::antipode_t1, "m(S⊗id)t1(a⊗b) = ε(a)b", compose({m, tensor(S, id), h.co().t1}), tensor(eps, id), &d2));
    v.add(check_equal(ids::antipode_t2, "m(id⊗S)t2(a⊗b) = ε(b)a", compose({m, tensor(id, S), h.co().t2}), tensor(id, eps), &d2));
    return v;
}

Verdict check_regular(const Hopf& h) {
    Verdict v("regularity of " + h.name());
    const std::string desc = "antipode invertible (flipped coproduct is again multiplier Hopf)";
    try {
        LinearMap inv = h.antipode_inverse();
        const auto& dom = h.alg().domain();
        auto c1 = check_equal(ids::antipode_invertible, desc + ": S⁻¹S = id", compose(inv, h.antipode()),
                              LinearMap::identity(h.space()), &dom);
        auto c2 = check_equal(ids::antipode_invertible, desc + ": SS⁻¹ = id", compose(h.antipode(), inv),
                              LinearMap::identity(h.space()), &dom);
        v.add(c1).add(c2);
        if (c1.pass && c2.pass && h.unital()) {
            Hopf cop = coopposite(h);
            Verdict flipped = check_multiplier_hopf(cop);
            for (const auto& c : flipped.conditions()) {
                Condition cc = c;
                cc.description = "flipped coproduct: " + cc.description;
                v.add(cc);
            }
        }
    } catch (const SingularMap& e) {
        v.add(fail_condition(ids::antipode_invertible, desc, Witness{ids::antipode_invertible, {e.witness().str()}, "0", "0", "kernel of S"}));
    } catch (const MathError& e) {
        v.add(fail_condition(ids::antipode_invertible, desc, Witness{ids::antipode_invertible, {}, "", "", e.what()}));
    }
    return v;
}

Verdict check_star_hopf(const Hopf& h) {
    Verdict v("*-structure of " + h.name());
    const Algebra& a = h.alg();
    v.add(check_star(a, ids::star));
    if (h.unital()) {
        const Space& s = a.space();
        Algebra aa = tensor_algebra(a, a);
        auto lhs = LinearMap::from_fn(s, s * s, [&](Index i) { return h.delta().apply(a.star(SparseVec::unit(i))); });
        auto rhs = LinearMap::from_fn(s, s * s, [&](Index i) { return aa.star(h.delta().column(i)); });
        v.add(check_equal(ids::delta_star, "Δ(a*) = Δ(a)*", lhs, rhs));
    }
    return v;
}

Verdict certify_hopf(const Hopf& h) {
    Verdict v("Hopf object " + h.name());
    v.merge(check_algebra(h.alg()));
    v.merge(check_comultiplication(h));
    v.merge(check_multiplier_hopf(h));
    v.merge(check_regular(h));
    if (h.alg().has_star()) v.merge(check_star_hopf(h));
    return v;
}

LinearMap functional_from(const Space& s, const SparseVec& values) {
    std::vector<SparseVec> cols(s.dim());
    for (const auto& t : values) cols[t.idx] = SparseVec::unit(0, t.c);
    return LinearMap::from_columns(s, Space::ground(), std::move(cols));
}

Condition check_integral(const Hopf& h, const LinearMap& phi, Side side) {
    const Algebra& a = h.alg();
    const Space& s = a.space();
    auto id = LinearMap::identity(s);
    auto d2 = power_domain(a, 2);
    const char* cid = side == Side::Left ? ids::left_integral : ids::right_integral;
    bool nonzero = false;
    for (auto i : a.domain()) nonzero = nonzero || !phi.column(i).empty();
    if (!nonzero)
        return fail_condition(ids::integral_nonzero, "integral is a nonzero functional",
                              Witness{ids::integral_nonzero, {}, "0", "nonzero", "functional vanishes on the domain"});
    if (side == Side::Left)
        return check_equal(cid, "(id⊗φ)t2(b⊗a) = φ(a)b", compose(tensor(id, phi), h.co().t2), tensor(id, phi), &d2);
    return check_equal(cid, "(ψ⊗id)t1(a⊗b) = ψ(a)b", compose(tensor(phi, id), h.co().t1), tensor(phi, id), &d2);
}

std::vector<LinearMap> solve_integrals(const Hopf& h, Side side) {
    const Algebra& a = h.alg();
    const Space& s = a.space();
    Index n = a.dim();
    const LinearMap& cover = side == Side::Left ? h.co().t2 : h.co().t1;
    // unknown φ = Σ c_j e_j*; constraint at (x, y, k) for every basis pair
    std::vector<std::vector<Term>> cols(n);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            Index base = (x * n + y) * n;
            for (const auto& t : cover.column(x * n + y)) {
                Index u = t.idx / n, w = t.idx % n;
                if (side == Side::Left)
                    cols[w].push_back({base + u, t.c});  // (id⊗φ): φ on second leg
                else
                    cols[u].push_back({base + w, t.c});  // (φ⊗id): φ on first leg
            }
            // minus φ(y) x (left) or φ(x) y (right)
            if (side == Side::Left)
                cols[y].push_back({base + x, Scalar(-1)});
            else
                cols[x].push_back({base + y, Scalar(-1)});
        }
    std::vector<SparseVec> vcols;
    for (auto& c : cols) vcols.push_back(SparseVec::from_terms(std::move(c)));
    auto sys = LinearMap::from_columns(s, Space::tensor({s, s, s}), std::move(vcols));
    std::vector<LinearMap> out;
    for (const auto& k : kernel_basis(sys)) out.push_back(functional_from(s, k));
    return out;
}

ModularResult modular_element(const Hopf& h, const LinearMap& phi) {
    const Algebra& a = h.alg();
    const Space& s = a.space();
    std::optional<Index> pick;
    for (Index i = 0; i < a.dim() && !pick; ++i)
        if (!phi.column(i).empty()) pick = i;
    if (!pick) throw MathError("functional is identically zero");
    Scalar scale = phi.column(*pick).coeff(0).inverse();
    auto phi_id = tensor(phi, LinearMap::identity(s));
    SparseVec delta = phi_id.apply(h.delta().column(*pick)).scaled(scale);
    // (φ⊗id)Δ(b) = φ(b)δ for every basis b
    auto lhs = compose(phi_id, h.delta());
    auto rhs = LinearMap::from_fn(s, s, [phi, delta](Index i) { return delta.scaled(phi.column(i).coeff(0)); });
    Condition cert = check_equal(ids::modular, "(φ⊗id)Δ(b) = φ(b)δ", lhs, rhs);
    return {Multiplier::from_element(a, delta), delta, cert};
}

Scalar Pairing::value(Index x, Index f) const { return form.column(x * qhat.dim() + f).coeff(0); }

Verdict check_pairing(const Pairing& p) {
    Verdict v("pairing " + p.q.name() + " × " + p.qhat.name());
    Index n = p.q.dim(), k = p.qhat.dim();
    // nondegenerate: the pairing matrix is square and invertible
    {
        auto mat = LinearMap::from_fn(p.q.space(), p.qhat.space(), [&](Index x) {
            std::vector<Term> t;
            for (Index f = 0; f < k; ++f) t.push_back({f, p.value(x, f)});
            return SparseVec::from_terms(std::move(t));
        });
        auto r = map_rank(mat);
        const std::string desc = "pairing matrix invertible";
        if (n != k || r.kernel_witness)
            v.add(fail_condition(ids::pairing_nondegenerate, desc,
                                 Witness{ids::pairing_nondegenerate, {}, "", "",
                                         r.kernel_witness ? "kernel " + format_vec(p.q.space(), *r.kernel_witness) : "dimension mismatch"}));
        else
            v.add(pass_condition(ids::pairing_nondegenerate, desc, n * k));
    }
    // ⟨xy, f⟩ = Σ ⟨x, f1⟩⟨y, f2⟩
    {
        const std::string desc = "⟨xy, f⟩ = ⟨x⊗y, Δf⟩";
        const auto& dq = p.qhat.delta();
        std::optional<Witness> bad;
        std::uint64_t count = 0;
        for (Index x = 0; x < n && !bad; ++x)
            for (Index y = 0; y < n && !bad; ++y)
                for (Index f = 0; f < k && !bad; ++f, ++count) {
                    Scalar lhs;
                    for (const auto& t : p.q.alg().product(x, y)) lhs += t.c * p.value(t.idx, f);
                    Scalar rhs;
                    for (const auto& t : dq.column(f)) rhs += t.c * p.value(x, t.idx / k) * p.value(y, t.idx % k);
                    if (!(lhs == rhs))
                        bad = Witness{ids::pairing_product, {p.q.space().label(x), p.q.space().label(y), p.qhat.space().label(f)},
                                      lhs.str(), rhs.str(), ""};
                }
        v.add(bad ? fail_condition(ids::pairing_product, desc, *bad) : pass_condition(ids::pairing_product, desc, count));
    }
    // ⟨Δx, f⊗g⟩ = ⟨x, fg⟩
    {
        const std::string desc = "⟨Δx, f⊗g⟩ = ⟨x, fg⟩";
        const auto& d = p.q.delta();
        std::optional<Witness> bad;
        std::uint64_t count = 0;
        for (Index x = 0; x < n && !bad; ++x)
            for (Index f = 0; f < k && !bad; ++f)
                for (Index g = 0; g < k && !bad; ++g, ++count) {
                    Scalar lhs;
                    for (const auto& t : d.column(x)) lhs += t.c * p.value(t.idx / n, f) * p.value(t.idx % n, g);
                    Scalar rhs;
                    for (const auto& t : p.qhat.alg().product(f, g)) rhs += t.c * p.value(x, t.idx);
                    if (!(lhs == rhs))
                        bad = Witness{ids::pairing_coproduct, {p.q.space().label(x), p.qhat.space().label(f), p.qhat.space().label(g)},
                                      lhs.str(), rhs.str(), ""};
                }
        v.add(bad ? fail_condition(ids::pairing_coproduct, desc, *bad) : pass_condition(ids::pairing_coproduct, desc, count));
    }
    return v;
}

}  // namespace mhf
