#include "mhforge/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "mhforge/error.hpp"
#include "mhforge/ids.hpp"

namespace mhf {

namespace {

void require_order(const Group& g) {
    if (g.size() > max_group_order)
        throw InputError("group " + g.name() + " has order " + std::to_string(g.size()) + ", above the cap of " +
                         std::to_string(max_group_order));
}

std::string power_label(const std::string& gen, int k) {
    if (k == 0) return "";
    return k == 1 ? gen : gen + std::to_string(k);
}

LinearMap columns_map(const Space& src, const Space& tgt, Index n, const std::function<SparseVec(Index)>& f) {
    std::vector<SparseVec> cols(n);
    for (Index i = 0; i < n; ++i) cols[i] = f(i);
    return LinearMap::from_columns(src, tgt, std::move(cols));
}

}  // namespace

Group::Group(std::string name, std::vector<std::string> labels, std::vector<Index> table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
    const Index n = labels_.size();
    identity_ = n;
    for (Index e = 0; e < n && identity_ == n; ++e) {
        bool ok = true;
        for (Index a = 0; a < n && ok; ++a) ok = table_[e * n + a] == a && table_[a * n + e] == a;
        if (ok) identity_ = e;
    }
    if (identity_ == n) throw InputError("group " + name_ + " has no identity");
    inverse_.assign(n, n);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (table_[a * n + b] == identity_) inverse_[a] = b;
    for (Index a = 0; a < n; ++a)
        if (inverse_[a] == n) throw InputError("group " + name_ + ": " + labels_[a] + " has no inverse");
}

Group Group::cyclic(int n) {
    if (n < 1) throw InputError("cyclic group order must be positive");
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k) labels.push_back(k == 0 ? "e" : power_label("g", k));
    std::vector<Index> t(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    return Group("C" + std::to_string(n), labels, t);
}

Group Group::dihedral(int n) {
    if (n < 1) throw InputError("dihedral parameter must be positive");
    std::vector<std::string> labels;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < n; ++k) {
            std::string l = power_label("r", k) + (j ? "s" : "");
            labels.push_back(l.empty() ? "e" : l);
        }
    const int m = 2 * n;
    std::vector<Index> t(m * m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            int a = x % n, i = x / n, b = y % n, j = y / n;
            int k = ((a + (i ? -b : b)) % n + n) % n;
            t[x * m + y] = ((i + j) % 2) * n + k;
        }
    return Group("D" + std::to_string(n), labels, t);
}

Group Group::symmetric(int n) {
    if (n < 1 || n > 4) throw InputError("symmetric groups are supported up to S4");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::string> labels;
    for (const auto& q : perms) {
        std::string s;
        for (int v : q) s += std::to_string(v);
        labels.push_back(s);
    }
    const Index m = perms.size();
    std::vector<Index> t(m * m);
    for (Index a = 0; a < m; ++a)
        for (Index b = 0; b < m; ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i] - 1];
            t[a * m + b] = std::find(perms.begin(), perms.end(), c) - perms.begin();
        }
    return Group("S" + std::to_string(n), labels, t);
}

Group Group::product(const Group& g, const Group& h) {
    const Index n = g.size(), m = h.size(), k = n * m;
    std::vector<std::string> labels;
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < m; ++b) labels.push_back("(" + g.labels_[a] + "," + h.labels_[b] + ")");
    std::vector<Index> t(k * k);
    for (Index x = 0; x < k; ++x)
        for (Index y = 0; y < k; ++y) t[x * k + y] = g.mul(x / m, y / m) * m + h.mul(x % m, y % m);
    return Group(g.name_ + "x" + h.name_, labels, t);
}

Group Group::from_family(const std::string& family, int n) {
    if (family == "cyclic") return cyclic(n);
    if (family == "dihedral") return dihedral(n);
    if (family == "symmetric") return symmetric(n);
    if (family == "klein") return product(cyclic(2), cyclic(2));
    throw InputError("unknown group family '" + family + "'");
}

Index Group::find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw InputError("no element '" + label + "' in " + name_);
    return it - labels_.begin();
}

Condition check_group(const Group& g) {
    const std::string desc = "group axioms of " + g.name();
    const Index n = g.size();
    if (n > max_group_order)
        return fail_condition(ids::assoc, desc, Witness{ids::assoc, {}, "", "", "order above " + std::to_string(max_group_order)});
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    return fail_condition(ids::assoc, desc,
                                          Witness{"(ab)c = a(bc)", {g.labels()[a], g.labels()[b], g.labels()[c]},
                                                  g.labels()[g.mul(g.mul(a, b), c)], g.labels()[g.mul(a, g.mul(b, c))], ""});
    return pass_condition(ids::assoc, desc, n * n * n);
}

Hopf group_algebra(const Group& g) {
    require_order(g);
    const Index n = g.size();
    Space s = Space::basis("k" + g.name(), g.labels());
    Algebra::Data d;
    d.name = "k" + g.name();
    d.space = s;
    d.table.resize(n * n);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) d.table[a * n + b] = SparseVec::unit(g.mul(a, b));
    d.unit = SparseVec::unit(g.identity());
    std::vector<SparseVec> star(n);
    for (Index a = 0; a < n; ++a) star[a] = SparseVec::unit(g.inv(a));
    d.star = std::move(star);
    d.local_units = LocalUnitStrategy::Unital;
    Algebra alg(std::move(d));
    LinearMap delta = columns_map(s, s * s, n, [&](Index a) { return SparseVec::unit(a * n + a); });
    LinearMap counit = columns_map(s, Space(), n, [](Index) { return SparseVec::unit(0); });
    LinearMap anti = columns_map(s, s, n, [&](Index a) { return SparseVec::unit(g.inv(a)); });
    return Hopf::from_delta(alg, delta, counit, anti, anti);
}

Hopf function_algebra(const Group& g) {
    require_order(g);
    const Index n = g.size();
    std::vector<std::string> labels;
    for (const auto& l : g.labels()) labels.push_back("d_" + l);
    Space s = Space::basis("k(" + g.name() + ")", labels);
    Algebra::Data d;
    d.name = "k(" + g.name() + ")";
    d.space = s;
    d.table.resize(n * n);
    for (Index a = 0; a < n; ++a) d.table[a * n + a] = SparseVec::unit(a);
    std::vector<Term> one;
    for (Index a = 0; a < n; ++a) one.push_back({a, Scalar(1)});
    d.unit = SparseVec::from_terms(one);
    std::vector<SparseVec> star(n);
    for (Index a = 0; a < n; ++a) star[a] = SparseVec::unit(a);
    d.star = std::move(star);
    d.local_units = LocalUnitStrategy::Idempotents;
    Algebra alg(std::move(d));
    LinearMap delta = columns_map(s, s * s, n, [&](Index c) {
        std::vector<Term> t;
        for (Index a = 0; a < n; ++a) t.push_back({a * n + g.mul(g.inv(a), c), Scalar(1)});
        return SparseVec::from_terms(std::move(t));
    });
    LinearMap counit = columns_map(s, Space(), n, [&](Index a) { return a == g.identity() ? SparseVec::unit(0) : SparseVec(); });
    LinearMap anti = columns_map(s, s, n, [&](Index a) { return SparseVec::unit(g.inv(a)); });
    return Hopf::from_delta(alg, delta, counit, anti, anti);
}

Pairing group_pairing(const Group& g) {
    Hopf q = group_algebra(g), qhat = function_algebra(g);
    const Index n = g.size();
    LinearMap form = columns_map(q.space() * qhat.space(), Space(), n * n,
                                 [n](Index i) { return i / n == i % n ? SparseVec::unit(0) : SparseVec(); });
    return Pairing{q, qhat, form};
}

namespace {

ActionPack action_pack(const Group& g, const std::function<Index(Index, Index)>& left,
                       const std::function<Index(Index, Index)>& right) {
    Hopf kg = group_algebra(g), fg = function_algebra(g);
    const Index n = g.size();
    ActionPack p;
    p.alg = fg.alg();
    p.left_hopf = kg;
    p.right_hopf = kg;
    // Q⊗A index x*n + h, A⊗L index h*n + x
    p.left_action = columns_map(kg.space() * fg.space(), fg.space(), n * n,
                                [&](Index i) { return SparseVec::unit(left(i / n, i % n)); });
    p.right_action = columns_map(fg.space() * kg.space(), fg.space(), n * n,
                                 [&](Index i) { return SparseVec::unit(right(i / n, i % n)); });
    return p;
}

}  // namespace

ActionPack translation_pack(const Group& g) {
    return action_pack(
        g, [&](Index x, Index h) { return g.mul(h, g.inv(x)); }, [&](Index h, Index x) { return g.mul(g.inv(x), h); });
}

ActionPack adjoint_pack(const Group& g) {
    return action_pack(
        g, [&](Index x, Index h) { return g.mul(g.mul(x, h), g.inv(x)); },
        [&](Index h, Index x) { return g.mul(g.mul(g.inv(x), h), x); });
}

ActionPack regular_coaction_pack(const Group& g) {
    Hopf kg = group_algebra(g);
    ActionPack p;
    p.alg = kg.alg();
    p.left_hopf = kg;
    p.right_hopf = kg;
    p.left_coaction = cover_left_coaction(kg.delta(), kg.alg());
    p.right_coaction = cover_right_coaction(kg.delta(), kg.alg());
    return p;
}

ActionPack crossed_module_pack(const Group& g) {
    Hopf kg = group_algebra(g);
    const Index n = g.size();
    ActionPack p = regular_coaction_pack(g);
    p.right_hopf.reset();
    p.right_coaction.reset();
    p.left_action = columns_map(kg.space() * kg.space(), kg.space(), n * n, [&](Index i) {
        Index x = i / n, h = i % n;
        return SparseVec::unit(g.mul(g.mul(x, h), g.inv(x)));
    });
    return p;
}

SparseVec involution_twist(const Group& g, Index a, Index b) {
    const Index n = g.size(), e = g.identity();
    if (g.mul(a, a) != e || g.mul(b, b) != e || g.mul(a, b) != g.mul(b, a) || a == e || b == e || a == b)
        throw InputError("involution twist needs distinct commuting involutions");
    const Scalar h(Rational(1, 2));
    return SparseVec::from_terms({{e * n + e, h}, {e * n + b, h}, {a * n + e, h}, {a * n + b, -h}});
}

ActionPack trivial_pack(const Group& g) {
    Hopf kg = group_algebra(g), fg = function_algebra(g);
    ActionPack p;
    p.alg = fg.alg();
    p.left_hopf = kg;
    p.right_hopf = kg;
    p.left_action = trivial_left_action(kg, p.alg);
    p.right_action = trivial_right_action(p.alg, kg);
    p.left_coaction = trivial_left_coaction(p.alg, kg);
    p.right_coaction = trivial_right_coaction(p.alg, kg);
    return p;
}

Hopf taft4() {
    // 0:1  1:g  2:x  3:gx
    Space s = Space::basis("taft4", {"1", "g", "x", "gx"});
    auto v = [](std::initializer_list<Term> t) { return SparseVec::from_terms(t); };
    const Scalar one(1), neg(-1);
    Algebra::Data d;
    d.name = "taft4";
    d.space = s;
    d.table = {
        v({{0, one}}), v({{1, one}}), v({{2, one}}),  v({{3, one}}),   // 1·
        v({{1, one}}), v({{0, one}}), v({{3, one}}),  v({{2, one}}),   // g·
        v({{2, one}}), v({{3, neg}}), {},             {},              // x·
        v({{3, one}}), v({{2, neg}}), {},             {},              // gx·
    };
    d.unit = SparseVec::unit(0);
    d.local_units = LocalUnitStrategy::Unital;
    Algebra alg(std::move(d));
    auto tt = [](Index a, Index b) { return a * 4 + b; };
    LinearMap delta = LinearMap::from_columns(s, s * s,
                                              {v({{tt(0, 0), one}}), v({{tt(1, 1), one}}),
                                               v({{tt(2, 0), one}, {tt(1, 2), one}}), v({{tt(3, 1), one}, {tt(0, 3), one}})});
    LinearMap counit = LinearMap::from_columns(s, Space(), {SparseVec::unit(0), SparseVec::unit(0), {}, {}});
    LinearMap anti = LinearMap::from_columns(s, s, {v({{0, one}}), v({{1, one}}), v({{3, neg}}), v({{2, one}})});
    LinearMap inv = LinearMap::from_columns(s, s, {v({{0, one}}), v({{1, one}}), v({{3, one}}), v({{2, neg}})});
    return Hopf::from_delta(alg, delta, counit, anti, inv);
}

Index kz_index(int radius, long n) { return static_cast<Index>(n + 3L * radius); }
long kz_point(int radius, Index i) { return static_cast<long>(i) - 3L * radius; }

Hopf windowed_kz(int radius) {
    if (radius < 1) throw InputError("window radius must be at least 1");
    const long w = 3L * radius;
    const Index n = 2 * w + 1;
    std::vector<std::string> labels;
    for (long k = -w; k <= w; ++k) labels.push_back("d" + std::to_string(k));
    Space s = Space::basis("K(Z)", labels);
    Algebra::Data d;
    d.name = "K(Z):" + std::to_string(radius);
    d.space = s;
    d.table.resize(n * n);
    for (Index a = 0; a < n; ++a) d.table[a * n + a] = SparseVec::unit(a);
    std::vector<SparseVec> star(n);
    for (Index a = 0; a < n; ++a) star[a] = SparseVec::unit(a);
    d.star = std::move(star);
    d.local_units = LocalUnitStrategy::Idempotents;
    std::vector<Index> dom;
    for (long k = -radius; k <= radius; ++k) dom.push_back(kz_index(radius, k));
    d.domain = std::move(dom);
    Algebra alg(std::move(d));

    auto inside = [w](long k) { return k >= -w && k <= w; };
    auto at = [radius](long k) { return kz_index(radius, k); };
    CoStructure co;
    co.t1 = LinearMap::from_fn(
        s * s, s * s,
        [=](Index i) {
            long a = kz_point(radius, i / n), b = kz_point(radius, i % n);
            return SparseVec::unit(at(a - b) * n + at(b));
        },
        [=](Index i) { return inside(kz_point(radius, i / n) - kz_point(radius, i % n)); });
    co.t2 = LinearMap::from_fn(
        s * s, s * s,
        [=](Index i) {
            long x = kz_point(radius, i / n), y = kz_point(radius, i % n);
            return SparseVec::unit(at(x) * n + at(y - x));
        },
        [=](Index i) { return inside(kz_point(radius, i % n) - kz_point(radius, i / n)); });
    co.counit = columns_map(s, Space(), n, [=](Index i) { return kz_point(radius, i) == 0 ? SparseVec::unit(0) : SparseVec(); });
    co.antipode = columns_map(s, s, n, [=](Index i) { return SparseVec::unit(at(-kz_point(radius, i))); });
    co.antipode_inv = co.antipode;
    return Hopf(alg, std::move(co));
}

LinearMap kz_integral(const Hopf& kz) {
    return columns_map(kz.space(), Space(), kz.dim(), [](Index) { return SparseVec::unit(0); });
}

ActionPack kz_reflection_pack(int radius) {
    Hopf kz = windowed_kz(radius), c2 = group_algebra(Group::cyclic(2));
    const Index na = kz.dim();
    ActionPack p;
    p.alg = kz.alg();
    p.left_hopf = c2;
    p.left_action = LinearMap::from_fn(c2.space() * kz.space(), kz.space(), [=](Index i) {
                        Index g = i / na, a = i % na;
                        long n = kz_point(radius, a);
                        return SparseVec::unit(kz_index(radius, g ? -n : n));
                    }).materialize();
    return p;
}

ActionPack regular_coaction_pack(const Hopf& h, bool left, bool right) {
    ActionPack p;
    p.alg = h.alg();
    if (left) {
        p.left_hopf = h;
        p.left_coaction = cover_left_coaction(h.delta(), h.alg());
    }
    if (right) {
        p.right_hopf = h;
        p.right_coaction = cover_right_coaction(h.delta(), h.alg());
    }
    return p;
}

}  // namespace mhf
