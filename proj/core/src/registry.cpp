#include "mhforge/registry.hpp"

#include <cctype>
#include <charconv>
#include <functional>

#include "mhforge/error.hpp"

namespace mhf {

namespace {

TwistPair group_twist(const Group& g, std::string name, std::function<std::pair<Index, Index>(Index, Index)> r_fn,
                      std::function<std::pair<Index, Index>(Index, Index)> t_fn) {
    Hopf fa = function_algebra(g), ga = group_algebra(g);
    const Index n = g.size();
    TwistPair tp;
    tp.name = std::move(name);
    tp.a = fa.alg();
    tp.b = ga.alg();
    // R: kG⊗k(G) → k(G)⊗kG on (q, h), T: k(G)⊗kG → k(G)⊗kG on (h, q)
    std::vector<SparseVec> rc(n * n), tc(n * n);
    for (Index i = 0; i < n * n; ++i) {
        auto [rh, rq] = r_fn(i / n, i % n);
        rc[i] = SparseVec::unit(rh * n + rq);
        auto [th, tq] = t_fn(i / n, i % n);
        tc[i] = SparseVec::unit(th * n + tq);
    }
    tp.r = LinearMap::from_columns(ga.space() * fa.space(), fa.space() * ga.space(), std::move(rc));
    tp.t = LinearMap::from_columns(fa.space() * ga.space(), fa.space() * ga.space(), std::move(tc));
    return tp;
}

int parse_int(const std::string& text, const std::string& what) {
    int v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size() || text.empty())
        throw InputError("expected a number in " + what + ", got '" + text + "'");
    return v;
}

std::pair<std::string, std::string> split_once(const std::string& s, char sep) {
    auto pos = s.find(sep);
    if (pos == std::string::npos) return {s, ""};
    return {s.substr(0, pos), s.substr(pos + 1)};
}

bool group_name_like(const std::string& s) {
    return !s.empty() && (s[0] == 'C' || s[0] == 'D' || s[0] == 'S' || s == "K4") &&
           (s.size() > 1 && std::isdigit(static_cast<unsigned char>(s[1])));
}

int kz_radius(const std::string& arg, const std::string& name) { return arg.empty() ? 8 : parse_int(arg, name); }

}  // namespace

TwistPair translation_twist(const Group& g) {
    return group_twist(
        g, "translation(" + g.name() + ")", [g](Index q, Index h) { return std::pair{g.mul(h, g.inv(q)), q}; },
        [g](Index h, Index q) { return std::pair{g.mul(g.inv(q), h), q}; });
}

TwistPair adjoint_smash_twist(const Group& g) {
    return group_twist(
        g, "adjoint-smash(" + g.name() + ")", [g](Index q, Index h) { return std::pair{g.mul(g.mul(q, h), g.inv(q)), q}; },
        [](Index h, Index q) { return std::pair{h, q}; });
}

TwistPair conjugation_twist(const Group& g) {
    return group_twist(
        g, "conjugation(" + g.name() + ")", [](Index q, Index h) { return std::pair{h, q}; },
        [g](Index h, Index q) { return std::pair{g.mul(g.mul(g.inv(q), h), q), q}; });
}

TwistPair reflection_twist(int radius) {
    Hopf kz = windowed_kz(radius), c2 = group_algebra(Group::cyclic(2));
    const Index na = kz.dim();
    TwistPair tp;
    tp.name = "reflection(KZ:" + std::to_string(radius) + ")";
    tp.a = kz.alg();
    tp.b = c2.alg();
    std::vector<SparseVec> rc(2 * na);
    for (Index i = 0; i < 2 * na; ++i) {
        Index g = i / na, a = i % na;
        long n = kz_point(radius, a);
        rc[i] = SparseVec::unit(kz_index(radius, g ? -n : n) * 2 + g);
    }
    tp.r = LinearMap::from_columns(c2.space() * kz.space(), kz.space() * c2.space(), std::move(rc));
    tp.t = LinearMap::identity(kz.space() * c2.space());
    return tp;
}

Hopf double_hopf(const Pairing& pairing) {
    DrinfeldDouble d = build_drinfeld_double(pairing);
    const Algebra& alg = d.twisted.alg;
    const Space& s = alg.space();
    const Hopf& qhat = pairing.qhat;
    Hopf cop = coopposite(pairing.q);
    Hopf coalg = tensor_hopf(qhat, cop);
    const Index n = s.dim(), nq = cop.dim();
    std::vector<SparseVec> dc(n), sc(n);
    const LinearMap s_hat = qhat.antipode(), s_cop = cop.antipode();
    for (Index i = 0; i < n; ++i) {
        dc[i] = coalg.delta().column(i);
        Index b = i / nq, a = i % nq;
        SparseVec left = SparseVec::tensor(qhat.alg().unit(), s_cop.column(a), nq);
        SparseVec right = SparseVec::tensor(s_hat.column(b), cop.alg().unit(), nq);
        sc[i] = alg.mul(left, right);
    }
    std::vector<SparseVec> ec(n);
    for (Index i = 0; i < n; ++i) ec[i] = coalg.co().counit.column(i);
    auto delta = LinearMap::from_columns(s, s * s, std::move(dc));
    auto counit = LinearMap::from_columns(s, Space::ground(), std::move(ec));
    auto antipode = LinearMap::from_columns(s, s, std::move(sc));
    return Hopf::from_delta(alg.renamed("D(" + pairing.q.name() + ")"), delta, counit, antipode);
}

Group group_by_name(const std::string& name) {
    auto pos = name.find('x');
    if (pos != std::string::npos) return Group::product(group_by_name(name.substr(0, pos)), group_by_name(name.substr(pos + 1)));
    if (name == "K4") return Group::from_family("klein", 0);
    if (name.size() < 2) throw InputError("unknown group '" + name + "'");
    int n = parse_int(name.substr(1), "group '" + name + "'");
    switch (name[0]) {
        case 'C': return Group::cyclic(n);
        case 'D': return Group::dihedral(n);
        case 'S': return Group::symmetric(n);
        default: throw InputError("unknown group '" + name + "'");
    }
}

Hopf hopf_by_name(const std::string& name) {
    if (name == "taft4") return taft4();
    auto [head, arg] = split_once(name, ':');
    if (head == "KZ") return windowed_kz(kz_radius(arg, name));
    if (name.size() > 3 && name.rfind("D(", 0) == 0 && name.back() == ')') {
        Group g = group_by_name(name.substr(2, name.size() - 3));
        return double_hopf(group_pairing(g));
    }
    if (name.size() > 1 && group_name_like(name.substr(1))) {
        if (name[0] == 'k') return group_algebra(group_by_name(name.substr(1)));
        if (name[0] == 'f') return function_algebra(group_by_name(name.substr(1)));
    }
    throw InputError("unknown catalog object '" + name + "'");
}

ActionPack pack_by_name(const std::string& name) {
    if (name == "taft4") return regular_coaction_pack(taft4());
    auto [head, arg] = split_once(name, ':');
    if (head == "KZ" || head == "reflection") return kz_reflection_pack(kz_radius(arg, name));
    if (!arg.empty()) {
        if (head == "translation") return translation_pack(group_by_name(arg));
        if (head == "adjoint") return adjoint_pack(group_by_name(arg));
        if (head == "regular") return regular_coaction_pack(group_by_name(arg));
        if (head == "crossed") return crossed_module_pack(group_by_name(arg));
        if (head == "trivial") return trivial_pack(group_by_name(arg));
        if (head == "composite" || head == "composite-rev") {
            Group g = group_by_name(arg);
            return long_composite_pack(translation_pack(g), regular_coaction_pack(g), head == "composite");
        }
    }
    if (name.size() > 1 && group_name_like(name.substr(1))) {
        if (name[0] == 'f') return translation_pack(group_by_name(name.substr(1)));
        if (name[0] == 'k') return regular_coaction_pack(group_by_name(name.substr(1)));
    }
    throw InputError("unknown catalog pack '" + name + "'");
}

TwistPair twist_by_name(const std::string& name) {
    auto [head, arg] = split_once(name, ':');
    if (head == "flip") {
        auto [a, b] = split_once(arg, ',');
        if (b.empty()) throw InputError("flip needs two objects: flip:<A>,<B>");
        TwistPair tp = TwistPair::flip(hopf_by_name(a).alg(), hopf_by_name(b).alg());
        tp.name = name;
        return tp;
    }
    if (head == "reflection") return reflection_twist(kz_radius(arg, name));
    if (!arg.empty()) {
        if (head == "translation") return translation_twist(group_by_name(arg));
        if (head == "adjoint-smash") return adjoint_smash_twist(group_by_name(arg));
        if (head == "conjugation") return conjugation_twist(group_by_name(arg));
    }
    throw InputError("unknown catalog twist '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> catalog_examples() {
    return {{"hopf", "kC2"},           {"hopf", "kS3"},          {"hopf", "fS3"},
            {"hopf", "taft4"},         {"hopf", "KZ:8"},         {"hopf", "D(S3)"},
            {"pack", "fS3"},           {"pack", "kS3"},          {"pack", "crossed:S3"},
            {"pack", "composite:S3"},  {"pack", "reflection:4"}, {"twist", "flip:kC2,kC2"},
            {"twist", "translation:S3"}, {"twist", "adjoint-smash:S3"}, {"twist", "conjugation:S3"}};
}

}  // namespace mhf
