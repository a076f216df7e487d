#include "mhforge/twostage.hpp"

#include "detail.hpp"
#include "mhforge/ids.hpp"

namespace mhf {

using detail::renamed;
using detail::require_law;
using detail::require_same;

namespace {

Algebra product_with_unit(const std::string& name, const Algebra& base, const LinearMap& mul) {
    Algebra out = Algebra::from_product(name, base.space(), mul.materialize());
    if (base.unital()) out = out.with_unit(base.unit());
    return out;
}

// id summary over a sub-verdict, named `id`
void summarize(Verdict& v, const Verdict& part, const std::string& id, const std::string& desc) {
    v.merge(part);
    if (part.pass()) {
        v.add(pass_condition(id, desc));
    } else {
        const Condition* f = part.first_failure();
        v.add(fail_condition(id, desc, f->witness.value_or(Witness{id, {}, "", "", f->id + " failed"})));
    }
}

void add_summary(Verdict& v, const std::string& id, const std::string& desc) {
    const Condition* f = v.first_failure();
    if (!f) {
        v.add(pass_condition(id, desc));
        return;
    }
    Witness w = f->witness.value_or(Witness{id, {}, "", "", f->id + " failed"});
    v.add(fail_condition(id, desc, std::move(w)));
}

}  // namespace

TwoSidedProduct build_two_sided(const Algebra& a, const Algebra& c, const Algebra& b, const LinearMap& r,
                                const LinearMap& t, const std::string& assoc_id) {
    const Space &sa = a.space(), &sc = c.space(), &sb = b.space();
    if (!(r.src() == sc * sa) || !(r.tgt() == sa * sc)) throw InputError("R must map C⊗A to A⊗C");
    if (!(t.src() == sb * sc) || !(t.tgt() == sc * sb)) throw InputError("T must map B⊗C to C⊗B");
    TwoSidedProduct out{a, c, b, r, t, Algebra(), Verdict()};
    const std::string name = a.name() + "⊠" + c.name() + "⊠" + b.name();
    LinearMap mul = compose({embed_leg(b.mul_map(), {2, 3}, {sa, sc, sb, sb}, {{sb}}),
                             embed_leg(c.mul_map(), {1, 2}, {sa, sc, sc, sb, sb}, {{sc}}),
                             embed_leg(a.mul_map(), {0, 1}, {sa, sa, sc, sc, sb, sb}, {{sa}}),
                             embed_leg(t, {3, 4}, {sa, sa, sc, sb, sc, sb}, {{sc, sb}}),
                             embed_leg(r, {1, 2}, {sa, sc, sa, sb, sc, sb}, {{sa, sc}}),
                             permute_blocks({sa, sc, sb, sa, sc, sb}, {0, 1, 3, 2, 4, 5})});
    Algebra alg = Algebra::from_product(name, sa * sc * sb, mul.materialize());
    out.verdict = Verdict("two-sided product " + name);
    bool unit = a.unital() && b.unital() && c.unital();
    if (unit) {
        // R(1⊗a) = a⊗1, R(c⊗1) = 1⊗c and the same for T
        auto fixes = [&](const LinearMap& m, const Algebra& first, const Algebra& second) {
            const Index nf = first.dim(), ns = second.dim();
            for (Index x = 0; x < ns; ++x)
                if (!(m.apply(SparseVec::tensor(first.unit(), SparseVec::unit(x), ns)) ==
                      SparseVec::tensor(SparseVec::unit(x), first.unit(), nf)))
                    return false;
            for (Index x = 0; x < nf; ++x)
                if (!(m.apply(SparseVec::tensor(SparseVec::unit(x), second.unit(), ns)) ==
                      SparseVec::tensor(second.unit(), SparseVec::unit(x), nf)))
                    return false;
            return true;
        };
        unit = fixes(r, c, a) && fixes(t, b, c);
        if (unit) alg = alg.with_unit(SparseVec::tensor(SparseVec::tensor(a.unit(), c.unit(), c.dim()), b.unit(), b.dim()));
    }
    out.verdict.add(check_associative(alg, assoc_id));
    if (unit) out.verdict.add(check_unit(alg, ids::unit));
    out.alg = std::move(alg);
    return out;
}

TwoSidedProduct build_two_sided_smash(ActionPack a, ActionPack c, ActionPack b) {
    Verdict pre("preconditions of the two-sided smash");
    require_law(a, law::left_module, "left factor", pre);
    require_law(c, law::left_comodule, "middle factor", pre);
    require_law(c, law::right_comodule, "middle factor", pre);
    require_law(b, law::right_module, "right factor", pre);
    require_same(c.q(), a.q(), "left coacting and acting objects");
    require_same(c.l(), b.l(), "right coacting and acting objects");
    const Space &sa = a.alg.space(), &sc = c.alg.space(), &sb = b.alg.space();
    const Space &sq = a.q().space(), &sl = b.l().space();
    // c⊗a ↦ c(-1)▷a ⊗ c0
    LinearMap r = compose({embed_leg(*a.left_action, {0, 1}, {sq, sa, sc}, {{sa}}),
                           permute_blocks({sq, sc, sa}, {0, 2, 1}),
                           embed_leg(c.gamma(), {0}, {sc, sa}, {{sq, sc}})});
    // b⊗c ↦ c0 ⊗ b◁c(1)
    LinearMap t = compose({embed_leg(*b.right_action, {1, 2}, {sc, sb, sl}, {{sb}}),
                           permute_blocks({sb, sc, sl}, {1, 0, 2}),
                           embed_leg(c.upsilon(), {1}, {sb, sc}, {{sc, sl}})});
    TwoSidedProduct out = build_two_sided(a.alg, c.alg, b.alg, r.materialize(), t.materialize(), ids::two_sided_assoc);
    Verdict v(out.verdict.subject());
    v.merge(pre);
    v.merge(out.verdict);
    out.verdict = std::move(v);
    return out;
}

TwoSidedProduct build_two_sided_lr(ActionPack a, ActionPack c, ActionPack b) {
    Verdict pre("preconditions of the two-sided L-R smash");
    require_law(a, law::right_comodule, "left factor", pre);
    require_law(c, law::bimodule, "middle factor", pre);
    require_law(b, law::left_comodule, "right factor", pre);
    require_same(a.l(), c.l(), "right coacting and acting objects");
    require_same(b.q(), c.q(), "left coacting and acting objects");
    const Space &sa = a.alg.space(), &sc = c.alg.space(), &sb = b.alg.space();
    const Space &sq = c.q().space(), &sl = c.l().space();
    // c⊗a ↦ a0 ⊗ c◁a(1)
    LinearMap r = compose({embed_leg(*c.right_action, {1, 2}, {sa, sc, sl}, {{sc}}),
                           permute_blocks({sc, sa, sl}, {1, 0, 2}),
                           embed_leg(a.upsilon(), {1}, {sc, sa}, {{sa, sl}})});
    // b⊗c ↦ b(-1)▷c ⊗ b0
    LinearMap t = compose({embed_leg(*c.left_action, {0, 1}, {sq, sc, sb}, {{sc}}),
                           permute_blocks({sq, sb, sc}, {0, 2, 1}),
                           embed_leg(b.gamma(), {0}, {sb, sc}, {{sq, sb}})});
    TwoSidedProduct out = build_two_sided(a.alg, c.alg, b.alg, r.materialize(), t.materialize(), ids::two_sided_lr_assoc);
    Verdict v(out.verdict.subject());
    v.merge(pre);
    v.merge(out.verdict);
    out.verdict = std::move(v);
    return out;
}

ActionPack tensor_module_pack(const ActionPack& a, const ActionPack& b) {
    if (!a.left_action || !b.right_action) throw InputError("A⊗B needs a left action on A and a right action on B");
    const Space &sa = a.alg.space(), &sb = b.alg.space();
    ActionPack p;
    p.alg = tensor_algebra(a.alg, b.alg);
    p.left_hopf = a.q();
    p.right_hopf = b.l();
    p.left_action = embed_leg(*a.left_action, {0, 1}, {a.q().space(), sa, sb}, {{sa}}).materialize();
    p.right_action = embed_leg(*b.right_action, {1, 2}, {sa, sb, b.l().space()}, {{sb}}).materialize();
    return p;
}

ActionPack tensor_comodule_pack(const ActionPack& a, const ActionPack& b) {
    if (!a.right_coaction || !b.left_coaction)
        throw InputError("A⊗B needs a right coaction on A and a left coaction on B");
    const Space &sa = a.alg.space(), &sb = b.alg.space(), &sq = b.q().space(), &sl = a.l().space();
    ActionPack p;
    p.alg = tensor_algebra(a.alg, b.alg);
    p.left_hopf = b.q();
    p.right_hopf = a.l();
    // a⊗b⊗x ↦ b(-1)x ⊗ a ⊗ b0
    p.left_coaction = compose(permute_blocks({sa, sq, sb}, {1, 0, 2}),
                              embed_leg(*b.left_coaction, {1, 2}, {sa, sb, sq}, {{sq, sb}}))
                          .materialize();
    // a⊗b⊗y ↦ a0 ⊗ b ⊗ a(1)y
    p.right_coaction = compose({permute_blocks({sa, sl, sb}, {0, 2, 1}),
                                embed_leg(*a.right_coaction, {0, 1}, {sa, sl, sb}, {{sa, sl}}),
                                permute_blocks({sa, sb, sl}, {0, 2, 1})})
                           .materialize();
    return p;
}

namespace {

// right coaction of C lifted to X⊗C (c the last leg)
LinearMap lift_right_coaction(const ActionPack& c, const Space& sx) {
    return embed_leg(*c.right_coaction, {1, 2}, {sx, c.alg.space(), c.l().space()}, {{c.alg.space(), c.l().space()}})
        .materialize();
}

// left coaction of C lifted to C⊗Y (c the first leg), covered
LinearMap lift_left_coaction(const ActionPack& c, const Space& sy) {
    const Space &sc = c.alg.space(), &sq = c.q().space();
    return compose(embed_leg(*c.left_coaction, {0, 1}, {sc, sq, sy}, {{sq, sc}}), permute_blocks({sc, sy, sq}, {0, 2, 1}))
        .materialize();
}

LinearMap lift_left_action(const ActionPack& c, const Space& sx) {
    const Space &sc = c.alg.space(), &sq = c.q().space();
    return compose(embed_leg(*c.left_action, {1, 2}, {sx, sq, sc}, {{sc}}), permute_blocks({sq, sx, sc}, {1, 0, 2}))
        .materialize();
}

LinearMap lift_right_action(const ActionPack& c, const Space& sy) {
    const Space &sc = c.alg.space(), &sl = c.l().space();
    return compose(embed_leg(*c.right_action, {0, 1}, {sc, sl, sy}, {{sc}}), permute_blocks({sc, sy, sl}, {0, 2, 1}))
        .materialize();
}

LinearMap left_action_first(const ActionPack& c, const Space& sy) {
    return embed_leg(*c.left_action, {0, 1}, {c.q().space(), c.alg.space(), sy}, {{c.alg.space()}}).materialize();
}

LinearMap right_action_last(const ActionPack& c, const Space& sx) {
    return embed_leg(*c.right_action, {1, 2}, {sx, c.alg.space(), c.l().space()}, {{c.alg.space()}}).materialize();
}

LinearMap left_coaction_last(const ActionPack& c, const Space& sx) {
    const Space &sc = c.alg.space(), &sq = c.q().space();
    return compose(permute_blocks({sx, sq, sc}, {1, 0, 2}), embed_leg(*c.left_coaction, {1, 2}, {sx, sc, sq}, {{sq, sc}}))
        .materialize();
}

LinearMap right_coaction_first(const ActionPack& c, const Space& sy) {
    const Space &sc = c.alg.space(), &sl = c.l().space();
    return compose({permute_blocks({sc, sl, sy}, {0, 2, 1}), embed_leg(*c.right_coaction, {0, 1}, {sc, sl, sy}, {{sc, sl}}),
                    permute_blocks({sc, sy, sl}, {0, 2, 1})})
        .materialize();
}

std::string part_id(const char* id, int part) { return std::string(id) + "(" + std::to_string(part) + ")"; }

// Parts (1)-(3): reorderings from the ◇ products of the composite pack onto
// the two-sided product, and the ⋆/◇ chain between them.
void reorder_parts(Verdict& v, const char* id, const TwoSidedProduct& product, const ActionPack& module,
                   const ActionPack& comodule, bool module_composite, const Space& sa, const Space& sc,
                   const Space& sb) {
    // ◇_l on (module, comodule) and ◇_r, with ⋆ for part (3)
    SmashIso left = iso_lr_vs_twisted(module, comodule, false);
    SmashIso right = iso_lr_vs_twisted(module, comodule, true);
    // spaces: left X⊗Y with X the module, right Y⊗X
    LinearMap phi_left, phi_left_inv, phi_right, phi_right_inv;
    if (module_composite) {
        // X = A⊗B, Y = C
        phi_left = permute_blocks({sa, sb, sc}, {0, 2, 1});
        phi_left_inv = permute_blocks({sa, sc, sb}, {0, 2, 1});
        phi_right = permute_blocks({sc, sa, sb}, {1, 0, 2});
        phi_right_inv = permute_blocks({sa, sc, sb}, {1, 0, 2});
    } else {
        // X = C, Y = A⊗B
        phi_left = permute_blocks({sc, sa, sb}, {1, 0, 2});
        phi_left_inv = permute_blocks({sa, sc, sb}, {1, 0, 2});
        phi_right = permute_blocks({sa, sb, sc}, {0, 2, 1});
        phi_right_inv = permute_blocks({sa, sc, sb}, {0, 2, 1});
    }
    // part (1) reads the ◇ whose composite sits on the left
    const bool first_is_left = module_composite;
    const SmashIso& p1 = first_is_left ? left : right;
    const SmashIso& p2 = first_is_left ? right : left;
    const LinearMap& m1 = first_is_left ? phi_left : phi_right;
    const LinearMap& m1i = first_is_left ? phi_left_inv : phi_right_inv;
    const LinearMap& m2 = first_is_left ? phi_right : phi_left;
    const LinearMap& m2i = first_is_left ? phi_right_inv : phi_left_inv;
    v.merge(p1.target.verdict);
    v.merge(p2.target.verdict);
    summarize(v, check_algebra_iso(part_id(id, 1), m1, p1.target.alg, product.alg, m1i), part_id(id, 1),
              p1.target.alg.name() + " ≅ " + product.alg.name());
    summarize(v, check_algebra_iso(part_id(id, 2), m2, p2.target.alg, product.alg, m2i), part_id(id, 2),
              p2.target.alg.name() + " ≅ " + product.alg.name());
    Verdict chain("⋆/◇ chain");
    chain.merge(left.verdict);
    chain.merge(right.verdict);
    chain.merge(check_algebra_iso(part_id(id, 3), compose(m2i, m1).materialize(), p1.target.alg, p2.target.alg,
                                  compose(m1i, m2).materialize()));
    summarize(v, chain, part_id(id, 3),
              left.source.alg.name() + " ≅ " + left.target.alg.name() + " ≅ " + right.target.alg.name() + " ≅ " +
                  right.source.alg.name());
}

}  // namespace

TwoSidedIso iso_two_sided(const ActionPack& a_in, const ActionPack& c_in, const ActionPack& b_in) {
    TwoSidedIso out;
    ActionPack a = a_in, c = c_in, b = b_in;
    out.product = build_two_sided_smash(a, c, b);
    out.verdict = Verdict("two-sided smash " + out.product.alg.name());
    out.verdict.merge(out.product.verdict);
    const Space &sa = a.alg.space(), &sc = c.alg.space(), &sb = b.alg.space();

    ActionPack ab = tensor_module_pack(a, b);
    reorder_parts(out.verdict, ids::two_sided_iso, out.product, ab, c, true, sa, sc, sb);

    // (4): (A#_l C)#_r B and A#_l (C#_r B)
    Verdict iter("iterated smash tables");
    TwistedProduct ac = build_smash({SmashVariant::Left, a, c, std::nullopt});
    iter.merge(ac.verdict);
    ActionPack acp;
    acp.alg = ac.alg;
    acp.right_hopf = c.l();
    acp.right_coaction = lift_right_coaction(c, sa);
    TwistedProduct outer_left = build_smash({SmashVariant::Right, b, acp, std::nullopt});
    iter.merge(outer_left.verdict);
    TwistedProduct cb = build_smash({SmashVariant::Right, b, c, std::nullopt});
    iter.merge(cb.verdict);
    ActionPack cbp;
    cbp.alg = cb.alg;
    cbp.left_hopf = c.q();
    cbp.left_coaction = lift_left_coaction(c, sb);
    TwistedProduct outer_right = build_smash({SmashVariant::Left, a, cbp, std::nullopt});
    iter.merge(outer_right.verdict);
    iter.add(compare_tables(part_id(ids::two_sided_iso, 4), "(A#C)#B = A⊠C⊠B", outer_left.alg, out.product.alg));
    iter.add(compare_tables(part_id(ids::two_sided_iso, 4), "A#(C#B) = A⊠C⊠B", outer_right.alg, out.product.alg));
    summarize(out.verdict, iter, part_id(ids::two_sided_iso, 4), "iterated smash products equal the two-sided product");
    add_summary(out.verdict, ids::two_sided_iso, "two-sided smash isomorphisms");
    return out;
}

TwoSidedIso iso_two_sided_lr(const ActionPack& a_in, const ActionPack& c_in, const ActionPack& b_in) {
    TwoSidedIso out;
    ActionPack a = a_in, c = c_in, b = b_in;
    out.product = build_two_sided_lr(a, c, b);
    out.verdict = Verdict("two-sided L-R smash " + out.product.alg.name());
    out.verdict.merge(out.product.verdict);
    const Space &sa = a.alg.space(), &sc = c.alg.space(), &sb = b.alg.space();

    ActionPack ab = tensor_comodule_pack(a, b);
    reorder_parts(out.verdict, ids::two_sided_lr_iso, out.product, c, ab, false, sa, sc, sb);

    // (4): (A#_r C)#_l B and A#_r (C#_l B)
    Verdict iter("iterated smash tables");
    TwistedProduct ac = build_smash({SmashVariant::Right, c, a, std::nullopt});
    iter.merge(ac.verdict);
    ActionPack acp;
    acp.alg = ac.alg;
    acp.left_hopf = c.q();
    acp.left_action = lift_left_action(c, sa);
    TwistedProduct outer_left = build_smash({SmashVariant::Left, acp, b, std::nullopt});
    iter.merge(outer_left.verdict);
    TwistedProduct cb = build_smash({SmashVariant::Left, c, b, std::nullopt});
    iter.merge(cb.verdict);
    ActionPack cbp;
    cbp.alg = cb.alg;
    cbp.right_hopf = c.l();
    cbp.right_action = lift_right_action(c, sb);
    TwistedProduct outer_right = build_smash({SmashVariant::Right, cbp, a, std::nullopt});
    iter.merge(outer_right.verdict);
    iter.add(compare_tables(part_id(ids::two_sided_lr_iso, 4), "(A#C)#B = A⊡C⊡B", outer_left.alg, out.product.alg));
    iter.add(compare_tables(part_id(ids::two_sided_lr_iso, 4), "A#(C#B) = A⊡C⊡B", outer_right.alg, out.product.alg));
    summarize(out.verdict, iter, part_id(ids::two_sided_lr_iso, 4), "iterated smash products equal the two-sided product");
    add_summary(out.verdict, ids::two_sided_lr_iso, "two-sided L-R smash isomorphisms");
    return out;
}

ActionPack long_composite_pack(const ActionPack& module, const ActionPack& comodule, bool module_first) {
    if (!module.left_action || !module.right_action) throw InputError("the module factor needs both actions");
    if (!comodule.left_coaction || !comodule.right_coaction) throw InputError("the comodule factor needs both coactions");
    const Space &sa = module.alg.space(), &sb = comodule.alg.space();
    ActionPack p;
    p.left_hopf = module.q();
    p.right_hopf = module.l();
    if (module_first) {
        p.alg = tensor_algebra(module.alg, comodule.alg);
        p.left_action = left_action_first(module, sb);
        p.right_action = lift_right_action(module, sb);
        p.left_coaction = left_coaction_last(comodule, sa);
        p.right_coaction = lift_right_coaction(comodule, sa);
    } else {
        p.alg = tensor_algebra(comodule.alg, module.alg);
        p.left_action = lift_left_action(module, sb);
        p.right_action = right_action_last(module, sb);
        p.left_coaction = lift_left_coaction(comodule, sa);
        p.right_coaction = right_coaction_first(comodule, sa);
    }
    return p;
}

const char* long_law_id(LongLaw law) {
    switch (law) {
        case LongLaw::LeftLeft: return ids::long_ll;
        case LongLaw::LeftRight: return ids::long_lr;
        case LongLaw::RightRight: return ids::long_rr;
        case LongLaw::RightLeft: return ids::long_rl;
    }
    return "";
}

namespace {

const char* long_law_flag(LongLaw law) {
    switch (law) {
        case LongLaw::LeftLeft: return law::long_left_left;
        case LongLaw::LeftRight: return law::long_left_right;
        case LongLaw::RightRight: return law::long_right_right;
        case LongLaw::RightLeft: return law::long_right_left;
    }
    return "";
}

}  // namespace

Condition check_long(const ActionPack& pack, LongLaw law) {
    const char* id = long_law_id(law);
    const Space& sa = pack.alg.space();
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw InputError(std::string("Long law ") + id + " needs " + what);
    };
    LinearMap lhs, rhs;
    std::string desc;
    switch (law) {
        case LongLaw::LeftLeft: {
            need(pack.left_action && pack.left_coaction, "a left action and a left coaction");
            const Space &sx = pack.q().space(), &sy = pack.q().space();
            desc = "Γ(x▷a)(y⊗1) = a(-1)y ⊗ x▷a0";
            // (x, a, y)
            lhs = compose(*pack.left_coaction, embed_leg(*pack.left_action, {0, 1}, {sx, sa, sy}, {{sa}}));
            rhs = compose({embed_leg(*pack.left_action, {1, 2}, {sy, sx, sa}, {{sa}}),
                           permute_blocks({sx, sy, sa}, {1, 0, 2}),
                           embed_leg(*pack.left_coaction, {1, 2}, {sx, sa, sy}, {{sy, sa}})});
            break;
        }
        case LongLaw::LeftRight: {
            need(pack.left_action && pack.right_coaction, "a left action and a right coaction");
            const Space &sx = pack.q().space(), &sy = pack.l().space();
            desc = "Υ(x▷a)(1⊗y) = x▷a0 ⊗ a(1)y";
            lhs = compose(*pack.right_coaction, embed_leg(*pack.left_action, {0, 1}, {sx, sa, sy}, {{sa}}));
            rhs = compose(embed_leg(*pack.left_action, {0, 1}, {sx, sa, sy}, {{sa}}),
                          embed_leg(*pack.right_coaction, {1, 2}, {sx, sa, sy}, {{sa, sy}}));
            break;
        }
        case LongLaw::RightRight: {
            need(pack.right_action && pack.right_coaction, "a right action and a right coaction");
            const Space& sx = pack.l().space();
            desc = "Υ(a◁x)(1⊗y) = a0◁x ⊗ a(1)y";
            // (a, x, y)
            lhs = compose(*pack.right_coaction, embed_leg(*pack.right_action, {0, 1}, {sa, sx, sx}, {{sa}}));
            rhs = compose({embed_leg(*pack.right_action, {0, 1}, {sa, sx, sx}, {{sa}}),
                           permute_blocks({sa, sx, sx}, {0, 2, 1}),
                           embed_leg(*pack.right_coaction, {0, 1}, {sa, sx, sx}, {{sa, sx}}),
                           permute_blocks({sa, sx, sx}, {0, 2, 1})});
            break;
        }
        case LongLaw::RightLeft: {
            need(pack.right_action && pack.left_coaction, "a right action and a left coaction");
            const Space &sx = pack.l().space(), &sy = pack.q().space();
            desc = "Γ(a◁x)(y⊗1) = a(-1)y ⊗ a0◁x";
            // (a, x, y)
            lhs = compose(*pack.left_coaction, embed_leg(*pack.right_action, {0, 1}, {sa, sx, sy}, {{sa}}));
            rhs = compose({embed_leg(*pack.right_action, {1, 2}, {sy, sa, sx}, {{sa}}),
                           embed_leg(*pack.left_coaction, {0, 1}, {sa, sy, sx}, {{sy, sa}}),
                           permute_blocks({sa, sx, sy}, {0, 2, 1})});
            break;
        }
    }
    return guarded(id, desc, [&] { return check_equal(id, desc, lhs, rhs); });
}

Verdict check_four_sides(ActionPack& pack) {
    Verdict v("four-sides Long certification of " + pack.alg.name());
    v.merge(certify_pack(pack));
    for (const char* l : {law::bimodule, law::bicomodule})
        if (!pack.certified.count(l))
            v.add(fail_condition(l, std::string("needs ") + l, Witness{l, {}, "", "", "not certified"}));
    bool all = pack.certified.count(law::bimodule) && pack.certified.count(law::bicomodule);
    for (LongLaw law : {LongLaw::LeftLeft, LongLaw::LeftRight, LongLaw::RightRight, LongLaw::RightLeft}) {
        Condition c = check_long(pack, law);
        if (c.pass) pack.certified.insert(long_law_flag(law));
        all = all && c.pass;
        v.add(std::move(c));
    }
    if (all) pack.certified.insert(law::four_sides);
    return v;
}

const char* long_product_name(LongProduct kind) {
    switch (kind) {
        case LongProduct::Left: return "•";
        case LongProduct::Right: return "∗";
        case LongProduct::LeftRight: return "⊛";
        case LongProduct::Enveloping: return "•env";
    }
    return "";
}

namespace {

const char* product_id(LongProduct kind) {
    switch (kind) {
        case LongProduct::Left: return ids::long_left_product;
        case LongProduct::Right: return ids::long_right_product;
        case LongProduct::LeftRight: return ids::long_lr_product;
        case LongProduct::Enveloping: return ids::long_enveloping_product;
    }
    return "";
}

// The product map of `kind` on A⊗A; no certification.
LinearMap long_mul(const ActionPack& p, LongProduct kind) {
    const Space& sa = p.alg.space();
    LinearMap m = p.alg.mul_map();
    switch (kind) {
        case LongProduct::Left: {
            const Space& sq = p.q().space();
            // a⊗b ↦ a0 ⊗ a(-1)▷b
            return compose({m, embed_leg(*p.left_action, {1, 2}, {sa, sq, sa}, {{sa}}), permute_blocks({sq, sa, sa}, {1, 0, 2}),
                            embed_leg(p.gamma(), {0}, {sa, sa}, {{sq, sa}})});
        }
        case LongProduct::Right: {
            const Space& sl = p.l().space();
            // a⊗b ↦ a◁b(1) ⊗ b0
            return compose({m, embed_leg(*p.right_action, {0, 1}, {sa, sl, sa}, {{sa}}), permute_blocks({sa, sa, sl}, {0, 2, 1}),
                            embed_leg(p.upsilon(), {1}, {sa, sa}, {{sa, sl}})});
        }
        case LongProduct::LeftRight: {
            const Space &sq = p.q().space(), &sl = p.l().space();
            // a⊗b ↦ a(-1) a0 b0 b(1) ↦ (a0◁b(1)) ⊗ (a(-1)▷b0)
            return compose({m, embed_leg(*p.left_action, {1, 2}, {sa, sq, sa}, {{sa}}),
                            embed_leg(*p.right_action, {0, 1}, {sa, sl, sq, sa}, {{sa}}),
                            permute_blocks({sq, sa, sa, sl}, {1, 3, 0, 2}),
                            embed_leg(p.upsilon(), {2}, {sq, sa, sa}, {{sa, sl}}),
                            embed_leg(p.gamma(), {0}, {sa, sa}, {{sq, sa}})});
        }
        case LongProduct::Enveloping:
            break;
    }
    throw InputError("enveloping product goes through the enveloping pack");
}

void require_long(ActionPack& p, LongLaw law, Verdict& v) {
    const char* flag = long_law_flag(law);
    if (p.certified.count(flag)) {
        v.add(pass_condition(long_law_id(law), p.alg.name() + " certified " + flag));
        return;
    }
    Condition c = check_long(p, law);
    bool ok = c.pass;
    v.add(std::move(c));
    if (!ok) throw InputError(p.alg.name() + " is not " + flag + " Long (" + long_law_id(law) + ")");
    p.certified.insert(flag);
}

}  // namespace

ActionPack enveloping_pack(const ActionPack& pack) {
    if (!pack.left_action || !pack.right_action || !pack.left_coaction || !pack.right_coaction)
        throw InputError("the enveloping pack needs both actions and both coactions");
    require_same(pack.q(), pack.l(), "left and right objects");
    const Hopf& q = pack.q();
    const Space &sa = pack.alg.space(), &sq = q.space();
    Hopf env = tensor_hopf(q, opposite(q));
    ActionPack p;
    p.alg = pack.alg;
    p.left_hopf = env;
    // x⊗y⊗a ↦ x▷a◁y
    p.left_action = compose({embed_leg(*pack.left_action, {0, 1}, {sq, sa}, {{sa}}),
                             embed_leg(*pack.right_action, {1, 2}, {sq, sa, sq}, {{sa}}),
                             permute_blocks({sq, sq, sa}, {0, 2, 1})})
                        .materialize();
    // a ↦ a(-1) ⊗ S⁻¹(a(1)) ⊗ a0
    LinearMap gamma = compose({permute_blocks({sq, sa, sq}, {0, 2, 1}),
                               embed_leg(q.antipode_inverse(), {2}, {sq, sa, sq}),
                               embed_leg(pack.upsilon(), {1}, {sq, sa}, {{sa, sq}}),
                               pack.gamma()})
                          .materialize();
    p.left_coaction = cover_left_coaction(gamma, env.alg()).materialize();
    return p;
}

LongResult twisted_product(ActionPack pack, LongProduct kind) {
    LongResult out;
    Verdict v(std::string("Long product ") + long_product_name(kind) + " on " + pack.alg.name());
    LinearMap mul;
    switch (kind) {
        case LongProduct::Left:
            require_law(pack, law::left_module, "Long algebra", v);
            require_law(pack, law::left_comodule, "Long algebra", v);
            require_long(pack, LongLaw::LeftLeft, v);
            mul = long_mul(pack, kind);
            break;
        case LongProduct::Right:
            require_law(pack, law::right_module, "Long algebra", v);
            require_law(pack, law::right_comodule, "Long algebra", v);
            require_long(pack, LongLaw::RightRight, v);
            mul = long_mul(pack, kind);
            break;
        case LongProduct::LeftRight: {
            if (!pack.certified.count(law::four_sides)) {
                Verdict fs = check_four_sides(pack);
                v.merge(fs);
                if (!fs.pass()) throw InputError(pack.alg.name() + " is not four-sides Long: " + fs.summary());
            }
            mul = long_mul(pack, kind);
            break;
        }
        case LongProduct::Enveloping: {
            ActionPack env = enveloping_pack(pack);
            Verdict ev("enveloping Long structure");
            require_law(env, law::left_module, "enveloping", ev);
            require_law(env, law::left_comodule, "enveloping", ev);
            require_long(env, LongLaw::LeftLeft, ev);
            summarize(v, ev, ids::long_enveloping, pack.alg.name() + " is left Q⊗Q^op-Long");
            mul = long_mul(env, LongProduct::Left);
            break;
        }
    }
    out.alg = product_with_unit(pack.alg.name() + "(" + long_product_name(kind) + ")", pack.alg, mul);
    v.add(renamed(check_associative(out.alg, ids::long_product_assoc), ids::long_product_assoc,
                  std::string(product_id(kind)) + " "));
    if (out.alg.unital()) v.add(check_unit(out.alg, product_id(kind)));
    out.verdict = std::move(v);
    return out;
}

Verdict check_factorization(const ActionPack& pack_in) {
    ActionPack pack = pack_in;
    Verdict v("factorization of ⊛ on " + pack.alg.name());
    v.merge(check_four_sides(pack));
    const Space& sa = pack.alg.space();
    Algebra lr = product_with_unit(pack.alg.name() + "(⊛)", pack.alg, long_mul(pack, LongProduct::LeftRight));
    Algebra left = product_with_unit(pack.alg.name() + "(•)", pack.alg, long_mul(pack, LongProduct::Left));
    Algebra right = product_with_unit(pack.alg.name() + "(∗)", pack.alg, long_mul(pack, LongProduct::Right));

    // (A,•) with the right structures, then ∗
    ActionPack lp = pack.with_algebra(left);
    v.merge(check_module_algebra(lp, Side::Right));
    v.merge(check_comodule_algebra(lp, Side::Right));
    v.add(renamed(check_long(lp, LongLaw::RightRight), ids::long_rr, "(A,•): "));
    Algebra left_then_right = Algebra::from_product("(A,•)∗", sa, long_mul(lp, LongProduct::Right).materialize());
    v.add(compare_tables(ids::long_factorization, "left twisting followed by right twisting equals ⊛", left_then_right, lr));

    ActionPack rp = pack.with_algebra(right);
    v.merge(check_module_algebra(rp, Side::Left));
    v.merge(check_comodule_algebra(rp, Side::Left));
    v.add(renamed(check_long(rp, LongLaw::LeftLeft), ids::long_ll, "(A,∗): "));
    Algebra right_then_left = Algebra::from_product("(A,∗)•", sa, long_mul(rp, LongProduct::Left).materialize());
    v.add(compare_tables(ids::long_factorization, "right twisting followed by left twisting equals ⊛", right_then_left, lr));
    return v;
}

AlphaIso iso_alpha(const ActionPack& pack_in) {
    AlphaIso out;
    ActionPack pack = pack_in;
    out.verdict = Verdict("α on " + pack.alg.name());
    Verdict fs = check_four_sides(pack);
    out.verdict.merge(fs);
    if (!fs.pass()) throw InputError(pack.alg.name() + " is not four-sides Long: " + fs.summary());
    out.source = twisted_product(pack, LongProduct::Enveloping);
    out.target = twisted_product(pack, LongProduct::LeftRight);
    out.verdict.merge(out.source.verdict);
    out.verdict.merge(out.target.verdict);
    const Space &sa = pack.alg.space(), &sl = pack.l().space();
    // a ↦ a0◁a(1), a0◁S⁻¹(a(1))
    out.map = compose(*pack.right_action, pack.upsilon()).materialize();
    out.inverse = compose({*pack.right_action, embed_leg(pack.l().antipode_inverse(), {1}, {sa, sl}), pack.upsilon()})
                      .materialize();
    out.verdict.merge(check_algebra_iso(ids::long_alpha, out.map, out.source.alg, out.target.alg, out.inverse));
    return out;
}

}  // namespace mhf
