#include "mhforge/actions.hpp"

#include "mhforge/echelon.hpp"
#include "mhforge/error.hpp"
#include "mhforge/ids.hpp"

namespace mhf {

const Hopf& ActionPack::q() const {
    if (!left_hopf) throw InputError("no left Hopf object on " + alg.name());
    return *left_hopf;
}

const Hopf& ActionPack::l() const {
    if (!right_hopf) throw InputError("no right Hopf object on " + alg.name());
    return *right_hopf;
}

LinearMap ActionPack::gamma() const {
    if (!left_coaction) throw InputError("no left coaction on " + alg.name());
    return compose(*left_coaction, tensor(LinearMap::identity(alg.space()), q().alg().unit_map()));
}

LinearMap ActionPack::upsilon() const {
    if (!right_coaction) throw InputError("no right coaction on " + alg.name());
    return compose(*right_coaction, tensor(LinearMap::identity(alg.space()), l().alg().unit_map()));
}

SparseVec ActionPack::act_left(Index x, const SparseVec& a) const {
    Accumulator acc;
    Index n = alg.dim();
    for (const auto& t : a) acc.add(left_action->column(x * n + t.idx), t.c);
    return acc.take();
}

SparseVec ActionPack::act_right(const SparseVec& a, Index x) const {
    Accumulator acc;
    Index k = l().dim();
    for (const auto& t : a) acc.add(right_action->column(t.idx * k + x), t.c);
    return acc.take();
}

ActionPack ActionPack::with_algebra(Algebra a) const {
    ActionPack p = *this;
    if (!(a.space() == alg.space())) throw InputError("replacement algebra lives on a different space");
    p.alg = std::move(a);
    p.certified.clear();
    return p;
}

LinearMap cover_left_coaction(const LinearMap& gamma, const Algebra& q) {
    const Space& a = gamma.src();
    const Space& s = q.space();
    // Q⊗A⊗Q, multiply legs 0 and 2
    return compose(embed_leg(q.mul_map(), {0, 2}, {s, a, s}, {{s}}), tensor(gamma, LinearMap::identity(s))).materialize();
}

LinearMap cover_right_coaction(const LinearMap& upsilon, const Algebra& l) {
    const Space& a = upsilon.src();
    const Space& s = l.space();
    return compose(embed_leg(l.mul_map(), {1, 2}, {a, s, s}, {{s}}), tensor(upsilon, LinearMap::identity(s))).materialize();
}

LinearMap trivial_left_action(const Hopf& q, const Algebra& a) {
    return tensor(q.co().counit, LinearMap::identity(a.space())).materialize();
}

LinearMap trivial_right_action(const Algebra& a, const Hopf& l) {
    return tensor(LinearMap::identity(a.space()), l.co().counit).materialize();
}

LinearMap trivial_left_coaction(const Algebra& a, const Hopf& q) {
    return flip_map(a.space(), q.space()).materialize();
}

LinearMap trivial_right_coaction(const Algebra& a, const Hopf& l) {
    return LinearMap::identity(a.space() * l.space());
}

namespace {

std::vector<Index> all_of(const Space& s) {
    std::vector<Index> v(s.dim());
    for (Index i = 0; i < s.dim(); ++i) v[i] = i;
    return v;
}

// domain of tuples: Hopf legs range over the whole basis, algebra legs over
// the algebra's check domain
std::vector<Index> tuple_domain(const std::vector<std::pair<const Space*, const std::vector<Index>*>>& legs) {
    std::vector<Index> out{0};
    for (const auto& [s, dom] : legs) {
        std::vector<Index> next;
        for (auto p : out)
            for (auto q : *dom) next.push_back(p * s->dim() + q);
        out = std::move(next);
    }
    return out;
}

}  // namespace

Verdict check_module_algebra(const ActionPack& p, Side side) {
    const Algebra& a = p.alg;
    const Space& sa = a.space();
    const auto& da = a.domain();
    Verdict v;
    if (side == Side::Left) {
        v = Verdict("left module algebra " + a.name());
        if (!p.left_action) return v.add(fail_condition(ids::left_module_algebra, "left action present", Witness{}));
        const Hopf& q = p.q();
        const Space& sq = q.space();
        auto dq = all_of(sq);
        const LinearMap& act = *p.left_action;
        auto d_qqa = tuple_domain({{&sq, &dq}, {&sq, &dq}, {&sa, &da}});
        v.add(check_equal(ids::left_module, "x▷(y▷a) = (xy)▷a", compose(act, tensor(LinearMap::identity(sq), act)),
                          compose(act, tensor(q.alg().mul_map(), LinearMap::identity(sa))), &d_qqa));
        if (q.alg().unital()) {
            v.add(check_equal(ids::left_module_unital, "1▷a = a",
                              compose(act, tensor(q.alg().unit_map(), LinearMap::identity(sa))), LinearMap::identity(sa), &da));
            auto d_qaa = tuple_domain({{&sq, &dq}, {&sa, &da}, {&sa, &da}});
            LinearMap rhs = compose({a.mul_map(), tensor(act, act), permute_blocks({sq, sq, sa, sa}, {0, 2, 1, 3}),
                                     tensor({q.delta(), LinearMap::identity(sa), LinearMap::identity(sa)})});
            v.add(check_equal(ids::left_module_algebra, "x▷(ab) = Σ(x1▷a)(x2▷b)",
                              compose(act, tensor(LinearMap::identity(sq), a.mul_map())), rhs, &d_qaa));
        } else {
            auto d_qa = tuple_domain({{&sq, &dq}, {&sa, &da}});
            auto r = map_rank(act, &d_qa);
            bool ok = r.rank >= da.size();
            v.add(ok ? pass_condition(ids::left_module_unital, "Q▷A spans A", d_qa.size())
                     : fail_condition(ids::left_module_unital, "Q▷A spans A", Witness{ids::left_module_unital, {}, "", "", "rank deficit"}));
            v.add(fail_condition(ids::left_module_algebra, "module algebra law needs a unital acting object",
                                 Witness{ids::left_module_algebra, {}, "", "", "non-unital acting object"}));
        }
    } else {
        v = Verdict("right module algebra " + a.name());
        if (!p.right_action) return v.add(fail_condition(ids::right_module_algebra, "right action present", Witness{}));
        const Hopf& l = p.l();
        const Space& sl = l.space();
        auto dl = all_of(sl);
        const LinearMap& act = *p.right_action;
        auto d_all = tuple_domain({{&sa, &da}, {&sl, &dl}, {&sl, &dl}});
        v.add(check_equal(ids::right_module, "(a◁x)◁y = a◁(xy)", compose(act, tensor(act, LinearMap::identity(sl))),
                          compose(act, tensor(LinearMap::identity(sa), l.alg().mul_map())), &d_all));
        if (l.alg().unital()) {
            v.add(check_equal(ids::right_module_unital, "a◁1 = a",
                              compose(act, tensor(LinearMap::identity(sa), l.alg().unit_map())), LinearMap::identity(sa), &da));
            auto d_aal = tuple_domain({{&sa, &da}, {&sa, &da}, {&sl, &dl}});
            LinearMap rhs = compose({a.mul_map(), tensor(act, act), permute_blocks({sa, sa, sl, sl}, {0, 2, 1, 3}),
                                     tensor({LinearMap::identity(sa), LinearMap::identity(sa), l.delta()})});
            v.add(check_equal(ids::right_module_algebra, "(ab)◁x = Σ(a◁x1)(b◁x2)",
                              compose(act, tensor(a.mul_map(), LinearMap::identity(sl))), rhs, &d_aal));
        } else {
            v.add(fail_condition(ids::right_module_algebra, "module algebra law needs a unital acting object",
                                 Witness{ids::right_module_algebra, {}, "", "", "non-unital acting object"}));
        }
    }
    return v;
}

Verdict check_bimodule_algebra(const ActionPack& p) {
    Verdict v("bimodule algebra " + p.alg.name());
    v.merge(check_module_algebra(p, Side::Left));
    v.merge(check_module_algebra(p, Side::Right));
    if (!p.left_action || !p.right_action) return v;
    const Space& sa = p.alg.space();
    const Space &sq = p.q().space(), &sl = p.l().space();
    auto dq = all_of(sq), dl = all_of(sl);
    auto dom = tuple_domain({{&sq, &dq}, {&sa, &p.alg.domain()}, {&sl, &dl}});
    v.add(check_equal(ids::bimodule, "(x▷a)◁y = x▷(a◁y)",
                      compose(*p.right_action, tensor(*p.left_action, LinearMap::identity(sl))),
                      compose(*p.left_action, tensor(LinearMap::identity(sq), *p.right_action)), &dom));
    return v;
}

Verdict check_comodule_algebra(const ActionPack& p, Side side) {
    const Algebra& a = p.alg;
    const Space& sa = a.space();
    const auto& da = a.domain();
    auto d2 = tuple_domain({{&sa, &da}, {&sa, &da}});
    Verdict v;
    if (side == Side::Left) {
        v = Verdict("left comodule algebra " + a.name());
        if (!p.left_coaction) return v.add(fail_condition(ids::left_comodule_algebra, "left coaction present", Witness{}));
        const Hopf& q = p.q();
        const Space& sq = q.space();
        auto dq = all_of(sq);
        auto dcov = tuple_domain({{&sa, &da}, {&sq, &dq}});
        {
            const std::string desc = "Γ(a)(x⊗1) lands in Q⊗A";
            Condition c = pass_condition(ids::cover_defined, desc, dcov.size());
            for (auto t : dcov)
                if (!p.left_coaction->defined(t)) {
                    c = fail_condition(ids::cover_defined, desc, Witness{ids::cover_defined, (sa * sq).label_tuple(t), "", "", "undefined"});
                    break;
                }
            v.add(c);
        }
        LinearMap g = p.gamma();
        auto id_a = LinearMap::identity(sa);
        v.add(check_equal(ids::left_comodule_coassoc, "(id⊗Γ)Γ = (Δ⊗id)Γ", compose(tensor(LinearMap::identity(sq), g), g),
                          compose(tensor(q.delta(), id_a), g), &da));
        v.add(check_equal(ids::left_comodule_counit, "(ε⊗id)Γ = id", compose(tensor(q.co().counit, id_a), g), id_a, &da));
        LinearMap rhs = compose({tensor(q.alg().mul_map(), a.mul_map()), permute_blocks({sq, sa, sq, sa}, {0, 2, 1, 3}), tensor(g, g)});
        v.add(check_equal(ids::left_comodule_algebra, "Γ(ab) = Γ(a)Γ(b)", compose(g, a.mul_map()), rhs, &d2));
    } else {
        v = Verdict("right comodule algebra " + a.name());
        if (!p.right_coaction) return v.add(fail_condition(ids::right_comodule_algebra, "right coaction present", Witness{}));
        const Hopf& l = p.l();
        const Space& sl = l.space();
        auto dl = all_of(sl);
        auto dcov = tuple_domain({{&sa, &da}, {&sl, &dl}});
        {
            const std::string desc = "Υ(a)(1⊗x) lands in A⊗L";
            Condition c = pass_condition(ids::cover_defined, desc, dcov.size());
            for (auto t : dcov)
                if (!p.right_coaction->defined(t)) {
                    c = fail_condition(ids::cover_defined, desc, Witness{ids::cover_defined, (sa * sl).label_tuple(t), "", "", "undefined"});
                    break;
                }
            v.add(c);
        }
        LinearMap u = p.upsilon();
        auto id_a = LinearMap::identity(sa);
        v.add(check_equal(ids::right_comodule_coassoc, "(Υ⊗id)Υ = (id⊗Δ)Υ", compose(tensor(u, LinearMap::identity(sl)), u),
                          compose(tensor(id_a, l.delta()), u), &da));
        v.add(check_equal(ids::right_comodule_counit, "(id⊗ε)Υ = id", compose(tensor(id_a, l.co().counit), u), id_a, &da));
        LinearMap rhs = compose({tensor(a.mul_map(), l.alg().mul_map()), permute_blocks({sa, sl, sa, sl}, {0, 2, 1, 3}), tensor(u, u)});
        v.add(check_equal(ids::right_comodule_algebra, "Υ(ab) = Υ(a)Υ(b)", compose(u, a.mul_map()), rhs, &d2));
    }
    return v;
}

Verdict check_bicomodule_algebra(const ActionPack& p) {
    Verdict v("bicomodule algebra " + p.alg.name());
    v.merge(check_comodule_algebra(p, Side::Left));
    v.merge(check_comodule_algebra(p, Side::Right));
    if (!p.left_coaction || !p.right_coaction) return v;
    const Space& sa = p.alg.space();
    const Hopf &q = p.q(), &l = p.l();
    const Space &sq = q.space(), &sl = l.space();
    auto dq = all_of(sq), dl = all_of(sl);
    auto dom = tuple_domain({{&sa, &p.alg.domain()}, {&sq, &dq}, {&sl, &dl}});
    // tuple (a, y, x):  (1⊗1⊗x)(id⊗Υ)(Γ(a)(y⊗1))  vs  ((Γ⊗id)((1⊗x)Υ(a)))(y⊗1)
    LinearMap u = p.upsilon(), g = p.gamma();
    LinearMap lhs = compose({embed_leg(l.alg().mul_map(), {3, 2}, {sq, sa, sl, sl}),
                             embed_leg(u, {1}, {sq, sa, sl}),
                             embed_leg(*p.left_coaction, {0, 1}, {sa, sq, sl}, std::vector<Space>{sq, sa})});
    LinearMap rhs = compose({embed_leg(q.alg().mul_map(), {0, 2}, {sq, sa, sq, sl}),
                             embed_leg(g, {0}, {sa, sq, sl}),
                             embed_leg(l.alg().mul_map(), {3, 1}, {sa, sl, sq, sl}),
                             embed_leg(u, {0}, {sa, sq, sl})});
    v.add(check_equal(ids::bicomodule, "(1⊗1⊗x)(id⊗Υ)(Γ(a)(y⊗1)) = ((Γ⊗id)((1⊗x)Υ(a)))(y⊗1)", lhs, rhs, &dom));
    return v;
}

Verdict certify_pack(ActionPack& p) {
    Verdict v("action pack on " + p.alg.name());
    auto run = [&](const Verdict& r, const char* flag) {
        v.merge(r);
        if (r.pass()) p.certified.insert(flag);
    };
    if (p.left_action) run(check_module_algebra(p, Side::Left), law::left_module);
    if (p.right_action) run(check_module_algebra(p, Side::Right), law::right_module);
    if (p.left_action && p.right_action) {
        Verdict b("bimodule");
        const Space& sa = p.alg.space();
        const Space &sq = p.q().space(), &sl = p.l().space();
        auto dq = all_of(sq), dl = all_of(sl);
        auto dom = tuple_domain({{&sq, &dq}, {&sa, &p.alg.domain()}, {&sl, &dl}});
        b.add(check_equal(ids::bimodule, "(x▷a)◁y = x▷(a◁y)",
                          compose(*p.right_action, tensor(*p.left_action, LinearMap::identity(sl))),
                          compose(*p.left_action, tensor(LinearMap::identity(sq), *p.right_action)), &dom));
        v.merge(b);
        if (b.pass() && p.certified.count(law::left_module) && p.certified.count(law::right_module))
            p.certified.insert(law::bimodule);
    }
    if (p.left_coaction) run(check_comodule_algebra(p, Side::Left), law::left_comodule);
    if (p.right_coaction) run(check_comodule_algebra(p, Side::Right), law::right_comodule);
    if (p.left_coaction && p.right_coaction) {
        Verdict full = check_bicomodule_algebra(p);
        Verdict only("bicomodule");
        only.add(*full.find(ids::bicomodule));
        v.merge(only);
        if (only.pass() && p.certified.count(law::left_comodule) && p.certified.count(law::right_comodule))
            p.certified.insert(law::bicomodule);
    }
    return v;
}

ActionPack dual_action_from_coaction(const Pairing& pairing, const ActionPack& pack) {
    const Space& sa = pack.alg.space();
    const Space& sh = pairing.qhat.space();
    Index k = sh.dim();
    ActionPack out;
    out.alg = pack.alg;
    auto pair_col = [&pairing](Index x) {
        // functional ⟨x, ·⟩ on Q̂ as values per f
        std::vector<Term> t;
        for (Index f = 0; f < pairing.qhat.dim(); ++f) t.push_back({f, pairing.value(x, f)});
        return SparseVec::from_terms(std::move(t));
    };
    std::vector<SparseVec> pv(pairing.q.dim());
    for (Index x = 0; x < pairing.q.dim(); ++x) pv[x] = pair_col(x);
    if (pack.right_coaction) {
        if (!(pack.l().space() == pairing.q.space())) throw InputError("pairing does not match the coacting object");
        LinearMap u = pack.upsilon().materialize();
        Index nl = pack.l().dim();
        out.left_hopf = pairing.qhat;
        out.left_action = LinearMap::from_fn(sh * sa, sa, [=](Index i) {
                              Index f = i / sa.dim(), v = i % sa.dim();
                              Accumulator acc;
                              for (const auto& t : u.column(v)) acc.add(t.idx / nl, t.c * pv[t.idx % nl].coeff(f));
                              return acc.take();
                          }).materialize();
    }
    if (pack.left_coaction) {
        if (!(pack.q().space() == pairing.q.space())) throw InputError("pairing does not match the coacting object");
        LinearMap g = pack.gamma().materialize();
        Index na = sa.dim();
        out.right_hopf = pairing.qhat;
        out.right_action = LinearMap::from_fn(sa * sh, sa, [=](Index i) {
                               Index v = i / k, f = i % k;
                               Accumulator acc;
                               for (const auto& t : g.column(v)) acc.add(t.idx % na, t.c * pv[t.idx / na].coeff(f));
                               return acc.take();
                           }).materialize();
    }
    return out;
}

}  // namespace mhf
