#pragma once

#include <string>
#include <vector>

#include "mhforge/actions.hpp"
#include "mhforge/error.hpp"

namespace mhf::detail {

inline std::vector<Index> tuple_domain(const std::vector<const Algebra*>& parts) {
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

inline Condition renamed(Condition c, const std::string& id, const std::string& prefix = "") {
    c.id = id;
    if (c.witness) c.witness->equation = id;
    if (!prefix.empty()) c.description = prefix + c.description;
    return c;
}

inline void require_same(const Hopf& x, const Hopf& y, const std::string& what) {
    if (!(x.space() == y.space())) throw InputError(what + ": " + x.name() + " and " + y.name() + " differ");
}

// Runs certify_pack when `law` is missing; the verdict goes into `v`.
inline void require_law(ActionPack& p, const char* law, const std::string& role, Verdict& v) {
    if (p.certified.count(law)) {
        v.add(pass_condition(law, role + " " + p.alg.name() + " certified " + law));
        return;
    }
    Verdict c = certify_pack(p);
    v.merge(c);
    if (!p.certified.count(law)) {
        const Condition* f = c.first_failure();
        throw InputError(role + " " + p.alg.name() + " is not a certified " + law +
                         (f ? " (" + f->id + ": " + f->description + ")" : ""));
    }
}

}  // namespace mhf::detail
