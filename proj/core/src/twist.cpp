#include "mhforge/twist.hpp"

#include "mhforge/echelon.hpp"
#include "mhforge/ids.hpp"
#include "mhforge/parallel.hpp"

namespace mhf {

namespace {

LinearMap ident(const Space& s) { return LinearMap::identity(s); }

std::vector<Index> tuple_domain(const std::vector<const Algebra*>& parts) {
    std::vector<Index> out{0};
    for (const Algebra* p : parts) {
        std::vector<Index> next;
        next.reserve(out.size() * p->domain().size());
        for (auto x : out)
            for (auto y : p->domain()) next.push_back(x * p->dim() + y);
        out = std::move(next);
    }
    return out;
}

// (a1,a2,b1,b2) → (a1,b1,a2,b2)
LinearMap middle_swap(const Space& x, const Space& y) { return permute_blocks({x, x, y, y}, {0, 2, 1, 3}); }

Condition check_maps(const char* id, const std::string& desc, const LinearMap& lhs, const LinearMap& rhs,
                     const std::vector<Index>& dom) {
    return guarded(id, desc, [&] { return check_equal(id, desc, lhs, rhs, &dom); });
}

Condition renamed(Condition c, const std::string& id, const std::string& prefix = "") {
    c.id = id;
    if (c.witness) c.witness->equation = id;
    if (!prefix.empty()) c.description = prefix + c.description;
    return c;
}

// b ↦ b⊗1 or 1⊗b style insertions of a unit
LinearMap unit_right(const Algebra& x, const Algebra& one) {
    return LinearMap::from_fn(x.space(), x.space() * one.space(),
                              [d = one.dim(), u = one.unit()](Index i) { return SparseVec::tensor(SparseVec::unit(i), u, d); });
}
LinearMap unit_left(const Algebra& one, const Algebra& x) {
    return LinearMap::from_fn(x.space(), one.space() * x.space(),
                              [d = x.dim(), u = one.unit()](Index i) { return SparseVec::tensor(u, SparseVec::unit(i), d); });
}

Algebra product_algebra(const TwistPair& tp, bool with_unit) {
    const Space &sa = tp.a.space(), &sb = tp.b.space();
    LinearMap mul = twisted_mul_map(tp);
    Algebra::Data d;
    d.name = tp.name;
    d.space = sa * sb;
    const Index n = d.space.dim();
    d.table = parallel_map<SparseVec>(n * n, [&](Index p) -> SparseVec {
        if (!mul.defined(p)) return {};
        try {
            return mul.column(p);
        } catch (const WindowOverflow&) {
            return {};
        }
    });
    if (with_unit) d.unit = SparseVec::tensor(tp.a.unit(), tp.b.unit(), tp.b.dim());
    d.field = (tp.a.field() == Field::Gaussian || tp.b.field() == Field::Gaussian) ? Field::Gaussian : Field::Rational;
    if (with_unit) d.local_units = LocalUnitStrategy::Unital;
    if (tp.a.restricted() || tp.b.restricted()) d.domain = tuple_domain({&tp.a, &tp.b});
    return Algebra(std::move(d));
}

std::vector<Condition> unit_conditions(const TwistPair& tp) {
    const Algebra &a = tp.a, &b = tp.b;
    std::vector<Condition> out;
    auto da = a.domain(), db = b.domain();
    out.push_back(check_maps(ids::twist_r_unit, "R(b⊗1) = 1⊗b", compose(tp.r, unit_right(b, a)), unit_left(a, b), db));
    out.push_back(check_maps(ids::twist_r_unit, "R(1⊗a) = a⊗1", compose(tp.r, unit_left(b, a)), unit_right(a, b), da));
    out.push_back(check_maps(ids::twist_t_unit, "T(a⊗1) = a⊗1", compose(tp.t, unit_right(a, b)), unit_right(a, b), da));
    out.push_back(check_maps(ids::twist_t_unit, "T(1⊗b) = 1⊗b", compose(tp.t, unit_left(a, b)), unit_left(a, b), db));
    return out;
}

// B⊗A⊗B → A⊗B: y⊗b⊗z ↦ b_R ⊗ y_R z, the left action of 1#y
LinearMap left_by_b_map(const TwistPair& tp) {
    const Space &sa = tp.a.space(), &sb = tp.b.space();
    return compose(embed_leg(tp.b.mul_map(), {1, 2}, {sa, sb, sb}, {{sb}}),
                   embed_leg(tp.r, {0, 1}, {sb, sa, sb}, {{sa, sb}}));
}

LinearMap left_by_b(const TwistPair& tp, const LinearMap& action, const SparseVec& y) {
    const Space ab = tp.a.space() * tp.b.space();
    return LinearMap::from_fn(ab, ab, [action, y, n = ab.dim()](Index i) {
        return action.apply(SparseVec::tensor(y, SparseVec::unit(i), n));
    });
}

bool is_identity_on(const LinearMap& m, const std::vector<Index>& dom) {
    if (!(m.src() == m.tgt())) return false;
    for (auto i : dom)
        if (!(m.column(i) == SparseVec::unit(i))) return false;
    return true;
}

}  // namespace

TwistPair TwistPair::flip(const Algebra& a, const Algebra& b) {
    TwistPair tp;
    tp.name = a.name() + "⊗" + b.name();
    tp.a = a;
    tp.b = b;
    tp.r = flip_map(b.space(), a.space());
    tp.t = ident(a.space() * b.space());
    tp.r_inv = flip_map(a.space(), b.space());
    tp.t_inv = tp.t;
    return tp;
}

LinearMap TwistPair::r_inverse() const { return r_inv ? *r_inv : map_inverse(r); }
LinearMap TwistPair::t_inverse() const { return t_inv ? *t_inv : map_inverse(t); }

TwistPair TwistPair::with_inverses() const {
    TwistPair out = *this;
    out.r_inv = r_inverse();
    out.t_inv = t_inverse();
    return out;
}

Verdict check_twist_axioms(const TwistPair& tp) {
    const Algebra &a = tp.a, &b = tp.b;
    const Space &sa = a.space(), &sb = b.space();
    if (!(tp.r.src() == sb * sa) || !(tp.r.tgt() == sa * sb))
        throw InputError("R must map " + (sb * sa).name() + " to " + (sa * sb).name());
    if (!(tp.t.src() == sa * sb) || !(tp.t.tgt() == sa * sb))
        throw InputError("T must be an endomorphism of " + (sa * sb).name());
    Verdict v("twist axioms of " + tp.name);
    const LinearMap ma = a.mul_map(), mb = b.mul_map();
    const std::vector<Space> ab{sa, sb};
    const LinearMap &r = tp.r, &t = tp.t;

    // R(m_B⊗id) = (id⊗m_B)R₁₂R₂₃ on B⊗B⊗A
    v.add(check_maps(ids::twist_r_mult_b, "R(m_B⊗id) = (id⊗m_B)R₁₂R₂₃", compose(r, tensor(mb, ident(sa))),
                     compose({embed_leg(mb, {1, 2}, {sa, sb, sb}, {{sb}}), embed_leg(r, {0, 1}, {sb, sa, sb}, ab),
                              embed_leg(r, {1, 2}, {sb, sb, sa}, ab)}),
                     tuple_domain({&b, &b, &a})));
    // R(id⊗m_A) = (m_A⊗id)R₂₃R₁₂ on B⊗A⊗A
    v.add(check_maps(ids::twist_r_mult_a, "R(id⊗m_A) = (m_A⊗id)R₂₃R₁₂", compose(r, tensor(ident(sb), ma)),
                     compose({embed_leg(ma, {0, 1}, {sa, sa, sb}, {{sa}}), embed_leg(r, {1, 2}, {sa, sb, sa}, ab),
                              embed_leg(r, {0, 1}, {sb, sa, sa}, ab)}),
                     tuple_domain({&b, &a, &a})));
    // T(id⊗m_B) = (id⊗m_B)T₁₃T₁₂ on A⊗B⊗B
    v.add(check_maps(ids::twist_t_mult_b, "T(id⊗m_B) = (id⊗m_B)T₁₃T₁₂", compose(t, tensor(ident(sa), mb)),
                     compose({embed_leg(mb, {1, 2}, {sa, sb, sb}, {{sb}}), embed_leg(t, {0, 2}, {sa, sb, sb}, ab),
                              embed_leg(t, {0, 1}, {sa, sb, sb}, ab)}),
                     tuple_domain({&a, &b, &b})));
    // T(m_A⊗id) = (m_A⊗id)T₁₃T₂₃ on A⊗A⊗B
    v.add(check_maps(ids::twist_t_mult_a, "T(m_A⊗id) = (m_A⊗id)T₁₃T₂₃", compose(t, tensor(ma, ident(sb))),
                     compose({embed_leg(ma, {0, 1}, {sa, sa, sb}, {{sa}}), embed_leg(t, {0, 2}, {sa, sa, sb}, ab),
                              embed_leg(t, {1, 2}, {sa, sa, sb}, ab)}),
                     tuple_domain({&a, &a, &b})));
    // R₂₃T₁₂ = T₁₃R₂₃ on A⊗B⊗A
    v.add(check_maps(ids::twist_rt_exchange, "R₂₃T₁₂ = T₁₃R₂₃",
                     compose(embed_leg(r, {1, 2}, {sa, sb, sa}, ab), embed_leg(t, {0, 1}, {sa, sb, sa}, ab)),
                     compose(embed_leg(t, {0, 2}, {sa, sa, sb}, ab), embed_leg(r, {1, 2}, {sa, sb, sa}, ab)),
                     tuple_domain({&a, &b, &a})));
    return v;
}

LinearMap twisted_mul_map(const TwistPair& tp) {
    const Space &sa = tp.a.space(), &sb = tp.b.space();
    auto r23 = embed_leg(tp.r, {1, 2}, {sa, sb, sa, sb}, {{sa, sb}});
    auto t14 = embed_leg(tp.t, {0, 3}, {sa, sa, sb, sb}, {{sa, sb}});
    return compose({tensor(tp.a.mul_map(), tp.b.mul_map()), t14, r23});
}

TwistedProduct build_twisted_product(const TwistPair& tp) {
    TwistedProduct out;
    out.pair = tp;
    out.verdict = Verdict("twisted product " + tp.name);
    out.verdict.merge(check_twist_axioms(tp));
    bool unit = false;
    if (tp.a.unital() && tp.b.unital()) {
        unit = true;
        for (auto& c : unit_conditions(tp)) {
            unit = unit && c.pass;
            out.verdict.add(std::move(c));
        }
    }
    out.alg = product_algebra(tp, unit);
    out.verdict.add(check_associative(out.alg, ids::twisted_product_assoc));
    if (unit) out.verdict.add(check_unit(out.alg, ids::twisted_product_unit));
    return out;
}

LinearMap star_rt(const TwistPair& tp) {
    const Space &sa = tp.a.space(), &sb = tp.b.space();
    // (a, x, b, y): T(a, y); x·y_T; R(x y_T, b); a_T·b_R
    return compose({embed_leg(tp.a.mul_map(), {0, 1}, {sa, sa, sb}, {{sa}}),
                    embed_leg(tp.r, {1, 2}, {sa, sb, sa}, {{sa, sb}}),
                    embed_leg(tp.b.mul_map(), {1, 3}, {sa, sb, sa, sb}, {{sb}}),
                    embed_leg(tp.t, {0, 3}, {sa, sb, sa, sb}, {{sa, sb}})});
}

LinearMap star_tr(const TwistPair& tp) {
    const Space &sa = tp.a.space(), &sb = tp.b.space();
    // (a, x, b, y): T(a, y); a_T·b; R(x, a_T b); x_R·y_T
    return compose({flip_map(sb, sa), embed_leg(tp.b.mul_map(), {0, 2}, {sb, sa, sb}, {{sb}}),
                    embed_leg(tp.r, {1, 0}, {sa, sb, sb}, {{sa, sb}}),
                    embed_leg(tp.a.mul_map(), {0, 2}, {sa, sb, sa, sb}, {{sa}}),
                    embed_leg(tp.t, {0, 3}, {sa, sb, sa, sb}, {{sa, sb}})});
}

Verdict check_nondegeneracy_twisted(const TwistPair& tp) {
    Verdict v("nondegeneracy of " + tp.name);
    const Space ab = tp.a.space() * tp.b.space();
    const Index n = ab.dim();
    auto dom_ab = tuple_domain({&tp.a, &tp.b});
    auto dom_ba = tuple_domain({&tp.b, &tp.a});
    for (auto [map, dom, what] : {std::tuple{&tp.r, &dom_ba, "R"}, std::tuple{&tp.t, &dom_ab, "T"}}) {
        const std::string desc = std::string(what) + " bijective";
        v.add(guarded(ids::twisted_nondegenerate, desc, [&, map = map, dom = dom]() -> Condition {
            auto r = map_rank(*map, dom);
            if (r.kernel_witness)
                return fail_condition(ids::twisted_nondegenerate, desc,
                                      Witness{ids::twisted_nondegenerate, {format_vec(map->src(), *r.kernel_witness)},
                                              "0", "0", "kernel element"});
            if (!tp.a.restricted() && !tp.b.restricted() && r.rank != map->tgt().dim())
                return fail_condition(ids::twisted_nondegenerate, desc,
                                      Witness{ids::twisted_nondegenerate, {}, std::to_string(r.rank),
                                              std::to_string(map->tgt().dim()), "not surjective"});
            return pass_condition(ids::twisted_nondegenerate, desc, dom->size());
        }));
    }
    // u ↦ (T*R(u⊗w))_w and u ↦ (R*T(w⊗u))_w injective
    const LinearMap tr = star_tr(tp), rt = star_rt(tp);
    for (int side = 0; side < 2; ++side) {
        const char* id = side == 0 ? ids::twisted_nondeg_hyp_left : ids::twisted_nondeg_hyp_right;
        const std::string desc = side == 0 ? "T*R(u⊗a⊗b) = 0 for all a, b implies u = 0"
                                           : "R*T(a⊗b⊗u) = 0 for all a, b implies u = 0";
        v.add(guarded(id, desc, [&]() -> Condition {
            auto stacked = LinearMap::from_fn(ab, ab * ab, [&, side](Index u) {
                std::vector<Term> out;
                for (auto w : dom_ab) {
                    SparseVec col = side == 0 ? tr.column(u * n + w) : rt.column(w * n + u);
                    for (const auto& t : col) out.push_back({w * n + t.idx, t.c});
                }
                return SparseVec::from_terms(std::move(out));
            });
            auto r = map_rank(stacked, &dom_ab);
            if (r.kernel_witness)
                return fail_condition(id, desc, Witness{id, {format_vec(ab, *r.kernel_witness)}, "0", "0", "annihilated element"});
            return pass_condition(id, desc, dom_ab.size() * dom_ab.size());
        }));
    }
    Algebra prod = product_algebra(tp, false);
    v.add(check_nondegenerate(prod, ids::twisted_nondegenerate));
    return v;
}

Verdict check_hopf_twist_conditions(const TwistPair& tp, const Hopf& ha, const Hopf& hb) {
    Verdict v("Hopf conditions of " + tp.name);
    const Space &sa = tp.a.space(), &sb = tp.b.space();
    if (tp.a.unital() && tp.b.unital())
        for (auto& c : unit_conditions(tp)) v.add(std::move(c));
    auto dom_ab = tuple_domain({&tp.a, &tp.b});
    auto dom_ba = tuple_domain({&tp.b, &tp.a});
    const LinearMap &ea = ha.co().counit, &eb = hb.co().counit;
    v.add(check_maps(ids::twist_counit, "(ε_A⊗ε_B)R = ε_B⊗ε_A", compose(tensor(ea, eb), tp.r), tensor(eb, ea), dom_ba));
    v.add(check_maps(ids::twist_counit, "(ε_A⊗ε_B)T = ε_A⊗ε_B", compose(tensor(ea, eb), tp.t), tensor(ea, eb), dom_ab));
    if (ha.unital() && hb.unital()) {
        const LinearMap dab = compose(middle_swap(sa, sb), tensor(ha.delta(), hb.delta()));
        const LinearMap dba = compose(middle_swap(sb, sa), tensor(hb.delta(), ha.delta()));
        v.add(check_maps(ids::twist_r_comult, "(id⊗τ⊗id)(Δ_A⊗Δ_B)R = (R⊗R)(id⊗τ⊗id)(Δ_B⊗Δ_A)", compose(dab, tp.r),
                         compose(tensor(tp.r, tp.r), dba), dom_ba));
        v.add(check_maps(ids::twist_t_comult, "(id⊗τ⊗id)(Δ_A⊗Δ_B)T = (T⊗T)(id⊗τ⊗id)(Δ_A⊗Δ_B)", compose(dab, tp.t),
                         compose(tensor(tp.t, tp.t), dab), dom_ab));
    }
    return v;
}

namespace {

LinearMap twisted_antipode(const TwistPair& tp, const Hopf& ha, const Hopf& hb) {
    return compose({tp.t, tp.r, tensor(hb.antipode(), ha.antipode()), flip_map(tp.a.space(), tp.b.space())});
}

std::optional<LinearMap> twisted_antipode_inverse(const TwistPair& tp, const Hopf& ha, const Hopf& hb) {
    try {
        return compose({flip_map(tp.b.space(), tp.a.space()), tensor(hb.antipode_inverse(), ha.antipode_inverse()),
                        tp.r_inverse(), tp.t_inverse()});
    } catch (const MathError&) {
        return std::nullopt;
    }
}

void merge_as(Verdict& v, const Verdict& part, const std::string& prefix) {
    for (const auto& c : part.conditions()) {
        Condition cc = c;
        cc.description = prefix + cc.description;
        v.add(std::move(cc));
    }
}

}  // namespace

TwistedProduct build_hopf_twisted(const TwistPair& tp, const Hopf& ha, const Hopf& hb) {
    if (!ha.unital() || !hb.unital()) throw InputError("build_hopf_twisted needs unital Hopf factors");
    TwistedProduct out = build_twisted_product(tp);
    out.verdict.merge(check_hopf_twist_conditions(tp, ha, hb));
    if (!out.alg.unital()) {
        out.verdict.add(fail_condition(ids::twisted_bialgebra, "1#1 is a unit",
                                       Witness{ids::twisted_bialgebra, {}, "", "", "unit conditions fail"}));
        return out;
    }
    const Space &sa = tp.a.space(), &sb = tp.b.space();
    const Space ab = sa * sb;
    const LinearMap delta = compose(middle_swap(sa, sb), tensor(ha.delta(), hb.delta())).materialize();
    const LinearMap eps = tensor(ha.co().counit, hb.co().counit).materialize();
    const LinearMap s = twisted_antipode(tp, ha, hb).materialize();
    Hopf h = Hopf::from_delta(out.alg, delta, eps, s, twisted_antipode_inverse(tp, ha, hb));

    const Algebra& alg = out.alg;
    const LinearMap m = alg.mul_map();
    const LinearMap id = ident(ab);
    auto d1 = alg.domain();
    auto d2 = tuple_domain({&alg, &alg});
    const LinearMap m4 = compose(tensor(m, m), middle_swap(ab, ab));
    Verdict& v = out.verdict;
    v.add(check_maps(ids::twisted_bialgebra, "Δ(uv) = Δ(u)Δ(v)", compose(delta, m), compose(m4, tensor(delta, delta)), d2));
    v.add(check_maps(ids::twisted_bialgebra, "(Δ⊗id)Δ = (id⊗Δ)Δ", compose(tensor(delta, id), delta),
                     compose(tensor(id, delta), delta), d1));
    v.add(check_maps(ids::twisted_bialgebra, "(ε⊗id)Δ = id", compose(tensor(eps, id), delta), id, d1));
    v.add(check_maps(ids::twisted_bialgebra, "(id⊗ε)Δ = id", compose(tensor(id, eps), delta), id, d1));
    v.add(check_maps(ids::twisted_bialgebra, "ε(uv) = ε(u)ε(v)", compose(eps, m), tensor(eps, eps), d2));
    const LinearMap unit_eps = compose(alg.unit_map(), eps);
    v.add(check_maps(ids::twist_left_antipode, "m(S⊗id)Δ = ε1", compose({m, tensor(s, id), delta}), unit_eps, d1));
    v.add(check_maps(ids::twist_right_antipode, "m(id⊗S)Δ = ε1", compose({m, tensor(id, s), delta}), unit_eps, d1));
    merge_as(v, certify_hopf(h), "product: ");
    out.hopf = std::move(h);
    return out;
}

CoverPair coproduct_candidates(const TwistPair& tp, const Hopf& ha, const Hopf& hb) {
    if (!hb.unital()) throw InputError("coproduct candidates need a unital right factor");
    const Space &sa = tp.a.space(), &sb = tp.b.space();
    const std::vector<Space> ab{sa, sb}, ba{sb, sa};
    const LinearMap tinv = tp.t_inverse(), rinv = tp.r_inverse();
    const LinearMap& db = hb.delta();
    const LinearMap mb = tp.b.mul_map();
    CoverPair out;
    // (a, x, b, y) → (a1#x1) ⊗ a2_T b_R # x2_R y_T
    out.first = compose({embed_leg(mb, {3, 4}, {sa, sb, sa, sb, sb}, {{sb}}),
                         embed_leg(tp.t, {2, 4}, {sa, sb, sa, sb, sb}, ab),
                         embed_leg(ha.co().t1, {0, 2}, {sa, sb, sa, sb, sb}, {{sa, sa}}),
                         embed_leg(tinv, {2, 4}, {sa, sb, sa, sb, sb}, ab),
                         embed_leg(tp.r, {2, 3}, {sa, sb, sb, sa, sb}, ab),
                         embed_leg(db, {1}, {sa, sb, sa, sb}, {{sb, sb}})});
    // (a, x, b, y) → a_T b1_R # x_R y1_T ⊗ (b2#y2)
    out.second = compose({embed_leg(mb, {1, 3}, {sa, sb, sa, sb, sb}, {{sb}}),
                          embed_leg(tp.r, {0, 1}, {sb, sa, sa, sb, sb}, ab),
                          embed_leg(ha.co().t2, {1, 2}, {sb, sa, sa, sb, sb}, {{sa, sa}}),
                          embed_leg(rinv, {0, 1}, {sa, sb, sa, sb, sb}, ba),
                          embed_leg(tp.t, {0, 3}, {sa, sb, sa, sb, sb}, ab),
                          embed_leg(db, {3}, {sa, sb, sa, sb}, {{sb, sb}})});
    return out;
}

Verdict check_coproduct_candidates(const TwistPair& tp, const Hopf& ha, const Hopf& hb, const Hopf& product) {
    Verdict v("coproduct candidates of " + tp.name);
    CoverPair c = coproduct_candidates(tp, ha, hb);
    const Algebra& alg = product.alg();
    const Space& ab = alg.space();
    auto d2 = tuple_domain({&alg, &alg});
    auto d3 = tuple_domain({&alg, &alg, &alg});
    const LinearMap id = ident(ab);
    v.add(check_maps(ids::twisted_cover_maps, "(T₂⊗id)(id⊗T₁) = (id⊗T₁)(T₂⊗id)",
                     compose(tensor(c.second, id), tensor(id, c.first)), compose(tensor(id, c.first), tensor(c.second, id)),
                     d3));
    if (product.unital()) {
        v.add(check_maps(ids::twisted_cover_maps, "T₁(u⊗v) = Δ(u)(1⊗v)", c.first, product.co().t1, d2));
        v.add(check_maps(ids::twisted_cover_maps, "T₂(u⊗v) = (u⊗1)Δ(v)", c.second, product.co().t2, d2));
    }
    return v;
}

TwistedProduct build_multiplier_hopf_twisted(const TwistPair& tp, const Hopf& ha, const Hopf& hb) {
    TwistedProduct out = build_twisted_product(tp);
    Verdict& v = out.verdict;
    v.merge(check_nondegeneracy_twisted(tp));
    const Space &sa = tp.a.space(), &sb = tp.b.space();
    const Space ab = sa * sb;
    const Algebra& alg = out.alg;
    CoverPair covers = coproduct_candidates(tp, ha, hb);
    CoStructure co;
    co.t1 = covers.first.materialize();
    co.t2 = covers.second.materialize();
    co.counit = tensor(ha.co().counit, hb.co().counit).materialize();
    co.antipode = twisted_antipode(tp, ha, hb).materialize();
    if (auto inv = twisted_antipode_inverse(tp, ha, hb)) co.antipode_inv = inv->materialize();
    if (ha.unital() && hb.unital() && alg.unital())
        co.delta = compose(middle_swap(sa, sb), tensor(ha.delta(), hb.delta())).materialize();
    Hopf h(alg, co);

    auto dom_ab = alg.domain();
    auto d2 = tuple_domain({&alg, &alg});
    const LinearMap id = ident(ab);
    const LinearMap m = alg.mul_map();

    // both sides multiplied on the right by 1⊗v
    {
        const std::string desc = "Δ(R(x⊗a)) = ((1⊗1)#Δ_B(x))(Δ_A(a)#(1⊗1)), covered by (1⊗v)";
        v.add(guarded(ids::twist_cover_delta, desc, [&]() -> Condition {
            const LinearMap action = left_by_b_map(tp);
            const Index nb = tp.b.dim(), na = tp.a.dim(), n = ab.dim();
            // Σ L(x1)⊗L(x2) for each basis x
            std::vector<LinearMap> lifts(nb);
            for (Index x = 0; x < nb; ++x) {
                LinearMap acc = LinearMap::zero(ab * ab, ab * ab);
                for (const auto& t : hb.delta().column(x))
                    acc = acc + scaled(tensor(left_by_b(tp, action, SparseVec::unit(t.idx / nb)),
                                              left_by_b(tp, action, SparseVec::unit(t.idx % nb))),
                                       t.c);
                lifts[x] = acc;
            }
            const Space src = sb * sa * ab;
            auto lhs = compose(co.t1, tensor(tp.r, id));
            auto rhs = LinearMap::from_fn(src, ab * ab, [&](Index i) {
                Index v_ = i % n, a = (i / n) % na, x = i / n / na;
                SparseVec a1 = SparseVec::tensor(SparseVec::unit(a), tp.b.unit(), nb);
                return lifts[x].apply(co.t1.apply(SparseVec::tensor(a1, SparseVec::unit(v_), n)));
            });
            auto dom = tuple_domain({&tp.b, &tp.a, &alg});
            return check_equal(ids::twist_cover_delta, desc, lhs, rhs, &dom);
        }));
    }
    // Δ∘T = (T⊗T)∘Δ
    {
        const std::string desc = "Δ∘T = (T⊗T)∘Δ";
        if (co.delta)
            v.add(check_maps(ids::twist_cover_counit, desc, compose(*co.delta, tp.t), compose(tensor(tp.t, tp.t), *co.delta),
                             dom_ab));
        else if (is_identity_on(tp.t, dom_ab))
            v.add(pass_condition(ids::twist_cover_counit, desc + " (T is the identity)", dom_ab.size()));
        else
            v.add(fail_condition(ids::twist_cover_counit, desc,
                                 Witness{ids::twist_cover_counit, {}, "", "", "needs unital factors or T = id"}));
    }
    const LinearMap& eps = co.counit;
    const LinearMap& s = co.antipode;
    v.add(check_maps(ids::twist_cover_left_antipode, "m(S⊗id)T₁(u⊗v) = ε(u)v", compose({m, tensor(s, id), co.t1}),
                     tensor(eps, id), d2));
    v.add(check_maps(ids::twist_cover_right_antipode, "m(id⊗S)T₂(u⊗v) = ε(v)u", compose({m, tensor(id, s), co.t2}),
                     tensor(id, eps), d2));
    merge_as(v, certify_hopf(h), "product: ");
    bool ok = v.pass();
    v.add(ok ? pass_condition(ids::twisted_multiplier_hopf, "multiplier Hopf algebra A#B", d2.size())
             : fail_condition(ids::twisted_multiplier_hopf, "multiplier Hopf algebra A#B",
                              Witness{ids::twisted_multiplier_hopf, {}, "", "", "a prerequisite failed"}));
    out.hopf = std::move(h);
    return out;
}

Verdict check_star_twisted(const TwistPair& tp, TwistedProduct& product) {
    const bool multiplier_case = product.hopf && !product.hopf->unital();
    Verdict v("*-structure of " + tp.name);
    const Algebra &a = tp.a, &b = tp.b;
    if (!a.has_star() || !b.has_star()) throw InputError("both factors need an involution");
    const Space ab = a.space() * b.space();
    const Index nb = b.dim();
    auto dom = tuple_domain({&a, &b});
    // conjugate-linear maps given by their basis images; squares are linear
    auto square_is_id = [&](const char* id, const std::string& desc, const LinearMap& f) {
        auto sq = LinearMap::from_fn(ab, ab, [f](Index i) { return f.apply_conj(f.column(i)); });
        return check_maps(id, desc, sq, ident(ab), dom);
    };
    auto rstar = LinearMap::from_fn(ab, ab, [&](Index i) {
        return tp.r.apply(SparseVec::tensor(b.star(SparseVec::unit(i % nb)), a.star(SparseVec::unit(i / nb)), a.dim()));
    });
    auto tstar = LinearMap::from_fn(ab, ab, [&](Index i) {
        return tp.t.apply(SparseVec::tensor(a.star(SparseVec::unit(i / nb)), b.star(SparseVec::unit(i % nb)), nb));
    });
    v.add(square_is_id(multiplier_case ? ids::twist_star_delta : ids::twist_star_square, "(R(*⊗*)τ)² = id", rstar));
    v.add(square_is_id(multiplier_case ? ids::twist_star_antipode : ids::twist_star_inverse, "(T(*⊗*))² = id", tstar));
    if (!v.pass()) return v;

    std::vector<SparseVec> cols(ab.dim());
    for (Index i = 0; i < ab.dim(); ++i) {
        try {
            cols[i] = tp.t.apply(rstar.column(i));
        } catch (const WindowOverflow&) {
        }
    }
    product.alg = product.alg.with_star(std::move(cols));
    const char* id = product.hopf ? ids::twisted_star_hopf : ids::twisted_star;
    v.add(renamed(check_star(product.alg, id), id));
    if (product.hopf) {
        Hopf h(product.alg, product.hopf->co());
        Verdict hv = check_star_hopf(h);
        for (const auto& c : hv.conditions()) v.add(renamed(c, id, "product: "));
        product.hopf = std::move(h);
    }
    return v;
}

Multiplier extend_multiplier(const TwistPair& tp, const Algebra& product, const Multiplier& m, const Multiplier& n) {
    const Space &sa = tp.a.space(), &sb = tp.b.space();
    const LinearMap tinv = tp.t_inverse(), rinv = tp.r_inverse();
    LinearMap lt = compose({tp.t, tensor(m.left, ident(sb)), tinv});
    LinearMap lr = compose({tp.r, tensor(n.left, ident(sa)), rinv});
    LinearMap rr = compose({tp.r, tensor(ident(sb), m.right), rinv});
    LinearMap rt = compose({tp.t, tensor(ident(sa), n.right), tinv});
    return {product, compose(lt, lr).materialize(), compose(rt, rr).materialize()};
}

Multiplier extend_multiplier_pair(const TwistPair& tp, const Algebra& product_squared, const Multiplier& m,
                                  const Multiplier& n) {
    const Space &sa = tp.a.space(), &sb = tp.b.space();
    const std::vector<Space> abab{sa, sb, sa, sb}, baba{sb, sa, sb, sa};
    const LinearMap tt = tensor(tp.t, tp.t), rr = tensor(tp.r, tp.r);
    const LinearMap tt_inv = tensor(tp.t_inverse(), tp.t_inverse()), rr_inv = tensor(tp.r_inverse(), tp.r_inverse());
    LinearMap lt = compose({tt, embed_leg(m.left, {0, 2}, abab, {{sa, sa}}), tt_inv});
    LinearMap lr = compose({rr, embed_leg(n.left, {0, 2}, baba, {{sb, sb}}), rr_inv});
    LinearMap rr_m = compose({rr, embed_leg(m.right, {1, 3}, baba, {{sa, sa}}), rr_inv});
    LinearMap rt_n = compose({tt, embed_leg(n.right, {1, 3}, abab, {{sb, sb}}), tt_inv});
    return {product_squared, compose(lt, lr).materialize(), compose(rt_n, rr_m).materialize()};
}

Verdict check_extension(const TwistPair& tp, const Algebra& product) {
    Verdict v("multiplier extension on " + tp.name);
    const Index nb = tp.b.dim();
    auto ext = extend_multiplier(tp, product, Multiplier::identity(tp.a), Multiplier::identity(tp.b));
    const std::string desc_id = "id#id is the identity multiplier";
    v.add(equal_multipliers(ext, Multiplier::identity(product))
              ? pass_condition(ids::twisted_multiplier, desc_id, 1)
              : fail_condition(ids::twisted_multiplier, desc_id, Witness{ids::twisted_multiplier, {}, "", "", "differs"}));
    for (auto i : tp.a.domain())
        for (auto j : tp.b.domain()) {
            auto ea = SparseVec::unit(i), eb = SparseVec::unit(j);
            auto mn = extend_multiplier(tp, product, Multiplier::from_element(tp.a, ea), Multiplier::from_element(tp.b, eb));
            auto c = check_multiplier(mn, ids::twisted_multiplier);
            if (!c.pass) {
                v.add(c);
                return v;
            }
            auto inner = Multiplier::from_element(product, tp.t.apply(SparseVec::tensor(ea, eb, nb)));
            if (!equal_multipliers(mn, inner)) {
                v.add(fail_condition(ids::twisted_multiplier, "a#x as multipliers equals the element T(a⊗x)",
                                     Witness{ids::twisted_multiplier, {tp.a.space().label(i), tp.b.space().label(j)},
                                             "", "", "extension differs from the inner multiplier"}));
                return v;
            }
        }
    v.add(pass_condition(ids::twisted_multiplier, "inner extensions are multipliers equal to T(a⊗x)",
                         tp.a.domain().size() * tp.b.domain().size()));
    return v;
}

TwistedIntegral integral_twisted(const TwistedProduct& tp, const LinearMap& psi_a, const LinearMap& psi_b) {
    if (!tp.hopf) throw InputError("integral_twisted needs a Hopf structure on the product");
    TwistedIntegral out{tensor(psi_a, psi_b).materialize(), {}};
    out.certificate = renamed(check_integral(*tp.hopf, out.functional, Side::Right), ids::twisted_integral);
    return out;
}

TwistedModular modular_twisted(const TwistedProduct& tp, const Hopf& ha, const Hopf& hb, const LinearMap& phi_a,
                               const LinearMap& phi_b) {
    if (!tp.hopf || !tp.hopf->unital()) throw InputError("modular_twisted needs a unital Hopf product");
    auto da = modular_element(ha, phi_a), db = modular_element(hb, phi_b);
    TwistedModular out{extend_multiplier(tp.pair, tp.alg, da.delta, db.delta), {}};
    const std::string desc = "δ_A#δ_B is the modular element of φ_A⊗φ_B";
    if (!da.certificate.pass || !db.certificate.pass) {
        out.certificate = fail_condition(ids::twisted_modular, desc,
                                         Witness{ids::twisted_modular, {}, "", "", "factor modular element not certified"});
        return out;
    }
    auto direct = modular_element(*tp.hopf, tensor(phi_a, phi_b));
    if (!direct.certificate.pass) {
        out.certificate = renamed(direct.certificate, ids::twisted_modular);
        return out;
    }
    auto as_elem = multiplier_to_element(out.delta);
    if (equal_multipliers(out.delta, direct.delta))
        out.certificate = pass_condition(ids::twisted_modular, desc, tp.alg.dim());
    else
        out.certificate = fail_condition(ids::twisted_modular, desc,
                                         Witness{ids::twisted_modular, {},
                                                 as_elem ? format_vec(tp.alg.space(), *as_elem) : "(not inner)",
                                                 format_vec(tp.alg.space(), direct.element), "δ_A#δ_B vs direct"});
    return out;
}

}  // namespace mhf
