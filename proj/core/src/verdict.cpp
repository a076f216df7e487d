#include "mhforge/verdict.hpp"

#include "mhforge/error.hpp"

namespace mhf {

Verdict& Verdict::add(Condition c) {
    conditions_.push_back(std::move(c));
    return *this;
}

Verdict& Verdict::merge(const Verdict& other) {
    for (const auto& c : other.conditions_) conditions_.push_back(c);
    return *this;
}

bool Verdict::pass() const {
    for (const auto& c : conditions_)
        if (!c.pass) return false;
    return true;
}

const Condition* Verdict::find(const std::string& id) const {
    for (const auto& c : conditions_)
        if (c.id == id) return &c;
    return nullptr;
}

const Condition* Verdict::first_failure() const {
    for (const auto& c : conditions_)
        if (!c.pass) return &c;
    return nullptr;
}

std::string Verdict::summary() const {
    std::string s;
    for (const auto& c : conditions_) {
        s += (c.pass ? "  pass  " : "  FAIL  ") + c.id + "  " + c.description;
        if (c.witness) {
            const auto& w = *c.witness;
            s += "\n        at (";
            for (std::size_t k = 0; k < w.tuple.size(); ++k) s += (k ? ", " : "") + w.tuple[k];
            s += ")";
            if (!w.lhs.empty() || !w.rhs.empty()) s += "\n        lhs = " + w.lhs + "\n        rhs = " + w.rhs;
            if (!w.note.empty()) s += "\n        " + w.note;
        }
        s += "\n";
    }
    return s;
}

Condition pass_condition(const std::string& id, const std::string& description, std::uint64_t checked) {
    return Condition{id, description, true, checked, std::nullopt};
}

Condition fail_condition(const std::string& id, const std::string& description, Witness w) {
    if (w.equation.empty()) w.equation = id;
    return Condition{id, description, false, 0, std::move(w)};
}

Condition check_equal(const std::string& id, const std::string& description, const LinearMap& lhs,
                      const LinearMap& rhs, const std::vector<Index>* domain) {
    return guarded(id, description, [&] {
        auto diff = first_difference(lhs, rhs, domain);
        std::uint64_t n = domain ? domain->size() : lhs.src().dim();
        if (!diff) return pass_condition(id, description, n);
        return fail_condition(id, description,
                              Witness{id, lhs.src().label_tuple(diff->column), format_vec(lhs.tgt(), diff->lhs),
                                      format_vec(rhs.tgt(), diff->rhs), ""});
    });
}

namespace {

nlohmann::ordered_json condition_json(const Condition& c) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["description"] = c.description;
    j["status"] = c.pass ? "pass" : "fail";
    j["checked"] = c.checked;
    if (c.witness) {
        nlohmann::ordered_json w;
        w["equation"] = c.witness->equation;
        w["tuple"] = c.witness->tuple;
        w["lhs"] = c.witness->lhs;
        w["rhs"] = c.witness->rhs;
        if (!c.witness->note.empty()) w["note"] = c.witness->note;
        j["witness"] = std::move(w);
    }
    return j;
}

}  // namespace

nlohmann::ordered_json Report::canonical_json() const {
    nlohmann::ordered_json j;
    j["construction"] = construction;
    j["status"] = verdict.pass() ? "pass" : "fail";
    j["conditions"] = nlohmann::ordered_json::array();
    for (const auto& c : verdict.conditions()) j["conditions"].push_back(condition_json(c));
    j["dims"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : dims) j["dims"][k] = v;
    if (!extra.is_null()) j["data"] = extra;
    return j;
}

nlohmann::ordered_json Report::full_json() const {
    nlohmann::ordered_json j = canonical_json();
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& [k, v] : timing_ms) t[k] = v;
    j["timing"] = t;
    return j;
}

}  // namespace mhf
