#include "mhforge/serialize.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "mhforge/error.hpp"

namespace mhf {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const Json& need(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::string at(const std::string& where, const std::string& key) { return where + "." + key; }
std::string at(const std::string& where, std::size_t k) { return where + "[" + std::to_string(k) + "]"; }

// label → index for any space, plain or tensor
class Labels {
public:
    explicit Labels(const Space& s) : s_(s) {}
    Index resolve(const Json& j, const std::string& where) {
        if (j.is_number_integer()) {
            auto v = j.get<long long>();
            if (v < 0 || static_cast<Index>(v) >= s_.dim()) fail(where, "index " + std::to_string(v) + " out of range");
            return static_cast<Index>(v);
        }
        if (!j.is_string()) fail(where, "expected a basis index or label");
        const auto label = j.get<std::string>();
        if (s_.arity() == 1) {
            if (auto i = s_.find(label)) return *i;
        } else {
            if (map_.empty())
                for (Index i = 0; i < s_.dim(); ++i) map_.emplace(s_.label(i), i);
            if (auto it = map_.find(label); it != map_.end()) return it->second;
        }
        fail(where, "no basis element '" + label + "' in " + s_.name());
    }

private:
    Space s_;
    std::unordered_map<std::string, Index> map_;
};

Index raw_index(const Json& j, Index bound, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an index");
    auto v = j.get<long long>();
    if (v < 0 || static_cast<Index>(v) >= bound) fail(where, "index " + std::to_string(v) + " out of range");
    return static_cast<Index>(v);
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of labels");
    std::vector<std::string> out;
    for (std::size_t k = 0; k < j.size(); ++k) {
        if (!j[k].is_string()) fail(at(where, k), "expected a label");
        out.push_back(j[k].get<std::string>());
    }
    return out;
}

Space space_from(const Json& j, const std::string& name, const std::string& where) {
    auto labels = string_list(need(j, "basis", where), at(where, "basis"));
    auto fit = j.find("factors");
    if (fit == j.end()) {
        std::vector<std::string> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail(at(where, "basis"), "repeated label");
        return Space::basis(name, labels);
    }
    const std::string fw = at(where, "factors");
    if (!fit->is_array() || fit->size() < 2) fail(fw, "expected at least two factors");
    std::vector<Space> parts;
    for (std::size_t k = 0; k < fit->size(); ++k) {
        const Json& f = (*fit)[k];
        const auto& nm = need(f, "name", at(fw, k));
        if (!nm.is_string()) fail(at(at(fw, k), "name"), "expected a string");
        parts.push_back(space_from(f, nm.get<std::string>(), at(fw, k)));
    }
    Space s = Space::tensor(parts);
    if (s.dim() != labels.size()) fail(at(where, "basis"), "length does not match the product of the factors");
    return s;
}

Field field_from(const Json& j, const std::string& where) {
    auto it = j.find("field");
    if (it == j.end()) return Field::Rational;
    if (*it == "Q") return Field::Rational;
    if (*it == "Q(i)") return Field::Gaussian;
    fail(at(where, "field"), "expected \"Q\" or \"Q(i)\"");
}

Group group_from_spec(const Json& j, const std::string& where) {
    const auto& fam = need(j, "family", where);
    if (!fam.is_string()) fail(at(where, "family"), "expected a string");
    int n = 0;
    if (auto it = j.find("n"); it != j.end()) {
        if (!it->is_number_integer()) fail(at(where, "n"), "expected an integer");
        n = it->get<int>();
    }
    return Group::from_family(fam.get<std::string>(), n);
}

std::optional<Hopf> shortcut_hopf(const Json& j, const std::string& where) {
    if (!j.is_object()) return std::nullopt;
    if (auto it = j.find("catalog"); it != j.end()) {
        if (!it->is_string()) fail(at(where, "catalog"), "expected a name");
        return hopf_by_name(it->get<std::string>());
    }
    if (auto it = j.find("group_algebra"); it != j.end()) return group_algebra(group_from_spec(*it, at(where, "group_algebra")));
    if (auto it = j.find("function_algebra"); it != j.end())
        return function_algebra(group_from_spec(*it, at(where, "function_algebra")));
    return std::nullopt;
}

void check_field(const Scalar& c, Field f, const std::string& where) {
    if (f == Field::Rational && !c.is_real()) fail(where, "imaginary coefficient over Q");
}

}  // namespace

std::string scalar_text(const Scalar& s) { return s.str(); }

Scalar scalar_from(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
    if (!j.is_string()) fail(where, "expected a scalar string such as \"-1/2\" or an integer");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

Json element_json(const Space&, const SparseVec& v) {
    Json out = Json::array();
    for (const auto& t : v) out.push_back(Json::array({t.idx, scalar_text(t.c)}));
    return out;
}

SparseVec element_from(const Json& j, const Space& s, const std::string& where) {
    Labels labels(s);
    std::vector<Term> terms;
    if (j.is_string() || j.is_number_integer()) return SparseVec::unit(labels.resolve(j, where));
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            terms.push_back({labels.resolve(Json(it.key()), at(where, it.key())), scalar_from(it.value(), at(where, it.key()))});
        return SparseVec::from_terms(std::move(terms));
    }
    if (!j.is_array()) fail(where, "expected an element: label, [[i, c]...] or {label: c}");
    for (std::size_t k = 0; k < j.size(); ++k) {
        const Json& t = j[k];
        if (!t.is_array() || t.size() != 2) fail(at(where, k), "expected [basis, coefficient]");
        terms.push_back({labels.resolve(t[0], at(at(where, k), 0)), scalar_from(t[1], at(at(where, k), 1))});
    }
    return SparseVec::from_terms(std::move(terms));
}

Json map_json(const LinearMap& m) {
    Json entries = Json::array();
    Json undefined = Json::array();
    for (Index i = 0; i < m.src().dim(); ++i) {
        if (!m.defined(i)) {
            undefined.push_back(i);
            continue;
        }
        for (const auto& t : m.column(i)) entries.push_back(Json::array({i, t.idx, scalar_text(t.c)}));
    }
    if (undefined.empty()) return entries;
    Json out;
    out["entries"] = std::move(entries);
    out["undefined"] = std::move(undefined);
    return out;
}

LinearMap map_from(const Json& j, const Space& src, const Space& tgt, const std::string& where) {
    const Json* entries = &j;
    std::vector<bool> undefined;
    std::string ew = where;
    if (j.is_object()) {
        entries = &need(j, "entries", where);
        ew = at(where, "entries");
        if (auto it = j.find("undefined"); it != j.end()) {
            if (!it->is_array()) fail(at(where, "undefined"), "expected an array of indices");
            undefined.assign(src.dim(), false);
            for (std::size_t k = 0; k < it->size(); ++k) undefined[raw_index((*it)[k], src.dim(), at(at(where, "undefined"), k))] = true;
        }
    }
    if (!entries->is_array()) fail(ew, "expected an array of [src, tgt, c] entries");
    std::vector<std::vector<Term>> cols(src.dim());
    for (std::size_t k = 0; k < entries->size(); ++k) {
        const Json& e = (*entries)[k];
        const std::string w = at(ew, k);
        if (!e.is_array() || e.size() != 3) fail(w, "expected [src, tgt, c]");
        Index s = raw_index(e[0], src.dim(), at(w, 0));
        Index t = raw_index(e[1], std::max<Index>(tgt.dim(), 1), at(w, 1));
        if (!undefined.empty() && undefined[s]) fail(w, "entry in an undefined column");
        cols[s].push_back({t, scalar_from(e[2], at(w, 2))});
    }
    std::vector<SparseVec> out(src.dim());
    for (Index i = 0; i < src.dim(); ++i) out[i] = SparseVec::from_terms(std::move(cols[i]));
    return LinearMap::from_columns(src, tgt, std::move(out), std::move(undefined));
}

Json algebra_json(const Algebra& a) {
    const auto& d = a.data();
    Json j;
    j["name"] = d.name;
    j["field"] = d.field == Field::Gaussian ? "Q(i)" : "Q";
    Json basis = Json::array();
    for (Index i = 0; i < a.dim(); ++i) basis.push_back(a.space().label(i));
    j["basis"] = std::move(basis);
    if (a.space().arity() == 1 && a.space().name() != d.name) j["space"] = a.space().name();
    if (a.space().arity() > 1) {
        Json factors = Json::array();
        for (const auto& f : a.space().factors()) factors.push_back(Json{{"name", f.name()}, {"basis", f.labels()}});
        j["factors"] = std::move(factors);
    }
    Json mul = Json::array();
    for (Index i = 0; i < a.dim(); ++i)
        for (Index k = 0; k < a.dim(); ++k)
            for (const auto& t : a.product(i, k)) mul.push_back(Json::array({i, k, t.idx, scalar_text(t.c)}));
    j["mul"] = std::move(mul);
    if (d.unit) j["unit"] = element_json(a.space(), *d.unit);
    if (d.star) {
        Json star = Json::array();
        for (Index i = 0; i < a.dim(); ++i) star.push_back(Json::array({i, element_json(a.space(), (*d.star)[i])}));
        j["star"] = std::move(star);
    }
    if (d.domain) j["domain"] = *d.domain;
    if (d.local_units == LocalUnitStrategy::Idempotents) j["local_units"] = "idempotents";
    return j;
}

Algebra algebra_from(const Json& j, const std::string& where) {
    if (j.is_object() && j.contains("catalog")) {
        const auto& nm = j["catalog"];
        if (!nm.is_string()) fail(at(where, "catalog"), "expected a name");
        try {
            return hopf_by_name(nm.get<std::string>()).alg();
        } catch (const InputError&) {
            try {
                return pack_by_name(nm.get<std::string>()).alg;
            } catch (const InputError&) {
                fail(at(where, "catalog"), "unknown catalog object '" + nm.get<std::string>() + "'");
            }
        }
    }
    if (auto h = shortcut_hopf(j, where)) return h->alg();
    if (!j.is_object()) fail(where, "expected an algebra definition");
    Algebra::Data d;
    d.name = "A";
    if (auto it = j.find("name"); it != j.end()) {
        if (!it->is_string()) fail(at(where, "name"), "expected a string");
        d.name = it->get<std::string>();
    }
    d.field = field_from(j, where);
    std::string space_name = d.name;
    if (auto it = j.find("space"); it != j.end()) {
        if (!it->is_string()) fail(at(where, "space"), "expected a string");
        space_name = it->get<std::string>();
    }
    d.space = space_from(j, space_name, where);
    const Index n = d.space.dim();
    Labels labels(d.space);
    const Json& mul = need(j, "mul", where);
    const std::string mw = at(where, "mul");
    if (!mul.is_array()) fail(mw, "expected an array of [i, j, k, c]");
    std::vector<std::vector<Term>> table(n * n);
    for (std::size_t k = 0; k < mul.size(); ++k) {
        const Json& e = mul[k];
        const std::string w = at(mw, k);
        if (!e.is_array() || e.size() != 4) fail(w, "expected [i, j, k, c]");
        Index a = labels.resolve(e[0], at(w, 0)), b = labels.resolve(e[1], at(w, 1)), c = labels.resolve(e[2], at(w, 2));
        Scalar s = scalar_from(e[3], at(w, 3));
        check_field(s, d.field, at(w, 3));
        table[a * n + b].push_back({c, s});
    }
    d.table.resize(n * n);
    for (Index i = 0; i < n * n; ++i) d.table[i] = SparseVec::from_terms(std::move(table[i]));
    if (auto it = j.find("unit"); it != j.end()) {
        d.unit = element_from(*it, d.space, at(where, "unit"));
        d.local_units = LocalUnitStrategy::Unital;
    }
    if (auto it = j.find("star"); it != j.end()) {
        const std::string sw = at(where, "star");
        if (!it->is_array()) fail(sw, "expected [[i, element]...]");
        std::vector<SparseVec> star(n);
        std::vector<bool> seen(n);
        for (std::size_t k = 0; k < it->size(); ++k) {
            const Json& e = (*it)[k];
            if (!e.is_array() || e.size() != 2) fail(at(sw, k), "expected [basis, element]");
            Index i = labels.resolve(e[0], at(at(sw, k), 0));
            if (seen[i]) fail(at(sw, k), "basis element listed twice");
            seen[i] = true;
            star[i] = element_from(e[1], d.space, at(at(sw, k), 1));
        }
        d.star = std::move(star);
    }
    if (auto it = j.find("domain"); it != j.end()) {
        if (!it->is_array()) fail(at(where, "domain"), "expected an array of basis references");
        std::vector<Index> dom;
        for (std::size_t k = 0; k < it->size(); ++k) dom.push_back(labels.resolve((*it)[k], at(at(where, "domain"), k)));
        std::sort(dom.begin(), dom.end());
        dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
        d.domain = std::move(dom);
    }
    if (auto it = j.find("local_units"); it != j.end()) {
        if (*it == "idempotents")
            d.local_units = LocalUnitStrategy::Idempotents;
        else if (*it == "unital" && d.unit)
            d.local_units = LocalUnitStrategy::Unital;
        else
            fail(at(where, "local_units"), "expected \"idempotents\" (or \"unital\" with a unit)");
    }
    return Algebra(std::move(d));
}

Json hopf_json(const Hopf& h) {
    Json j = algebra_json(h.alg());
    Json co;
    co["T1"] = map_json(h.co().t1);
    co["T2"] = map_json(h.co().t2);
    if (h.co().delta) co["delta"] = map_json(*h.co().delta);
    j["coproduct"] = std::move(co);
    Json counit = Json::array();
    for (Index i = 0; i < h.dim(); ++i) counit.push_back(scalar_text(h.counit(i)));
    j["counit"] = std::move(counit);
    j["antipode"] = map_json(h.antipode());
    if (h.co().antipode_inv) j["antipode_inv"] = map_json(*h.co().antipode_inv);
    return j;
}

Hopf hopf_from(const Json& j, const std::string& where) {
    if (auto h = shortcut_hopf(j, where)) return *h;
    Algebra alg = algebra_from(j, where);
    const Space& s = alg.space();
    const Json& cj = need(j, "counit", where);
    const std::string cw = at(where, "counit");
    if (!cj.is_array() || cj.size() != alg.dim()) fail(cw, "expected one scalar per basis element");
    std::vector<SparseVec> ec(alg.dim());
    for (Index i = 0; i < alg.dim(); ++i) {
        Scalar c = scalar_from(cj[i], at(cw, i));
        check_field(c, alg.field(), at(cw, i));
        if (!c.is_zero()) ec[i] = SparseVec::unit(0, c);
    }
    LinearMap counit = LinearMap::from_columns(s, Space::ground(), std::move(ec));
    LinearMap antipode = map_from(need(j, "antipode", where), s, s, at(where, "antipode"));
    std::optional<LinearMap> inv;
    if (auto it = j.find("antipode_inv"); it != j.end()) inv = map_from(*it, s, s, at(where, "antipode_inv"));
    const Json& co = need(j, "coproduct", where);
    const std::string ow = at(where, "coproduct");
    std::optional<LinearMap> delta;
    if (auto it = co.find("delta"); it != co.end()) delta = map_from(*it, s, s * s, at(ow, "delta"));
    const bool covers = co.contains("T1") || co.contains("T2");
    if (!covers) {
        if (!delta) fail(ow, "needs T1 and T2, or delta");
        if (!alg.unital()) fail(ow, "delta alone needs a unit; give T1 and T2");
        return Hopf::from_delta(alg, *delta, counit, antipode, inv);
    }
    CoStructure c;
    c.t1 = map_from(need(co, "T1", ow), s * s, s * s, at(ow, "T1"));
    c.t2 = map_from(need(co, "T2", ow), s * s, s * s, at(ow, "T2"));
    c.counit = counit;
    c.antipode = antipode;
    c.antipode_inv = inv;
    if (delta)
        c.delta = delta;
    else if (alg.unital())
        c.delta = compose(c.t1, tensor(LinearMap::identity(s), alg.unit_map())).materialize();
    return Hopf(alg, std::move(c));
}

Json pack_json(const ActionPack& p) {
    Json j;
    j["algebra"] = algebra_json(p.alg);
    if (p.left_hopf) j["left"] = hopf_json(*p.left_hopf);
    if (p.right_hopf) j["right"] = hopf_json(*p.right_hopf);
    if (p.left_action) j["left_action"] = map_json(*p.left_action);
    if (p.right_action) j["right_action"] = map_json(*p.right_action);
    if (p.left_coaction) {
        if (!p.q().unital()) throw InputError("cannot write a covered coaction over a non-unital object");
        j["left_coaction"] = map_json(p.gamma());
    }
    if (p.right_coaction) {
        if (!p.l().unital()) throw InputError("cannot write a covered coaction over a non-unital object");
        j["right_coaction"] = map_json(p.upsilon());
    }
    return j;
}

ActionPack pack_from(const Json& j, const std::string& where) {
    if (j.is_object() && j.contains("catalog")) {
        if (!j["catalog"].is_string()) fail(at(where, "catalog"), "expected a name");
        return pack_by_name(j["catalog"].get<std::string>());
    }
    ActionPack p;
    p.alg = algebra_from(need(j, "algebra", where), at(where, "algebra"));
    const Space& sa = p.alg.space();
    if (auto it = j.find("left"); it != j.end()) p.left_hopf = hopf_from(*it, at(where, "left"));
    if (auto it = j.find("right"); it != j.end()) p.right_hopf = hopf_from(*it, at(where, "right"));
    auto left = [&](const char* key) -> const Hopf& {
        if (!p.left_hopf) fail(where, std::string(key) + " needs a 'left' Hopf object");
        return *p.left_hopf;
    };
    auto right = [&](const char* key) -> const Hopf& {
        if (!p.right_hopf) fail(where, std::string(key) + " needs a 'right' Hopf object");
        return *p.right_hopf;
    };
    if (auto it = j.find("left_action"); it != j.end())
        p.left_action = map_from(*it, left("left_action").space() * sa, sa, at(where, "left_action"));
    if (auto it = j.find("right_action"); it != j.end())
        p.right_action = map_from(*it, sa * right("right_action").space(), sa, at(where, "right_action"));
    if (auto it = j.find("left_coaction"); it != j.end()) {
        const Hopf& q = left("left_coaction");
        if (!q.unital()) fail(at(where, "left_coaction"), "uncovered coactions need a unital object");
        auto gamma = map_from(*it, sa, q.space() * sa, at(where, "left_coaction"));
        p.left_coaction = cover_left_coaction(gamma, q.alg());
    }
    if (auto it = j.find("right_coaction"); it != j.end()) {
        const Hopf& l = right("right_coaction");
        if (!l.unital()) fail(at(where, "right_coaction"), "uncovered coactions need a unital object");
        auto upsilon = map_from(*it, sa, sa * l.space(), at(where, "right_coaction"));
        p.right_coaction = cover_right_coaction(upsilon, l.alg());
    }
    return p;
}

Json twist_json(const TwistPair& tp) {
    Json j;
    j["name"] = tp.name;
    j["A"] = algebra_json(tp.a);
    j["B"] = algebra_json(tp.b);
    j["R"] = map_json(tp.r);
    j["T"] = map_json(tp.t);
    return j;
}

TwistPair twist_from(const Json& j, const std::string& where) {
    if (j.is_object() && j.contains("catalog")) {
        if (!j["catalog"].is_string()) fail(at(where, "catalog"), "expected a name");
        return twist_by_name(j["catalog"].get<std::string>());
    }
    TwistPair tp;
    tp.name = "twist";
    if (auto it = j.find("name"); it != j.end() && it->is_string()) tp.name = it->get<std::string>();
    tp.a = algebra_from(need(j, "A", where), at(where, "A"));
    tp.b = algebra_from(need(j, "B", where), at(where, "B"));
    const Space &sa = tp.a.space(), &sb = tp.b.space();
    tp.r = map_from(need(j, "R", where), sb * sa, sa * sb, at(where, "R"));
    tp.t = map_from(need(j, "T", where), sa * sb, sa * sb, at(where, "T"));
    return tp;
}

Json parse_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(origin + ": " + e.what());
    }
}

Json load_reference(const std::string& ref) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(ref, ec)) {
        std::ifstream in(ref);
        if (!in) throw InputError(ref + ": cannot open");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_text(ss.str(), ref);
    }
    if (ref.find('/') != std::string::npos || (ref.size() > 5 && ref.substr(ref.size() - 5) == ".json"))
        throw InputError(ref + ": no such file");
    return Json{{"catalog", ref}};
}

}  // namespace mhf
