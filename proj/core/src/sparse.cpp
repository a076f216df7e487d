#include "mhforge/sparse.hpp"

#include <algorithm>

namespace mhf {

SparseVec SparseVec::unit(Index i, Scalar c) {
    SparseVec v;
    if (!c.is_zero()) v.terms_.push_back({i, std::move(c)});
    return v;
}

SparseVec SparseVec::from_terms(std::vector<Term> t) {
    SparseVec v;
    if (t.empty()) return v;
    bool sorted = true;
    for (std::size_t k = 1; k < t.size() && sorted; ++k) sorted = t[k - 1].idx < t[k].idx;
    if (sorted) {
        std::erase_if(t, [](const Term& x) { return x.c.is_zero(); });
        v.terms_ = std::move(t);
        return v;
    }
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.idx < b.idx; });
    auto& out = v.terms_;
    out.reserve(t.size());
    for (auto& x : t) {
        if (!out.empty() && out.back().idx == x.idx)
            out.back().c += x.c;
        else {
            if (!out.empty() && out.back().c.is_zero()) out.pop_back();
            out.push_back(std::move(x));
        }
    }
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    return v;
}

Scalar SparseVec::coeff(Index i) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), i, [](const Term& t, Index j) { return t.idx < j; });
    if (it != terms_.end() && it->idx == i) return it->c;
    return Scalar();
}

SparseVec SparseVec::scaled(const Scalar& s) const {
    SparseVec v;
    if (s.is_zero()) return v;
    v.terms_.reserve(terms_.size());
    for (const auto& t : terms_) v.terms_.push_back({t.idx, t.c * s});
    return v;
}

SparseVec SparseVec::conj() const {
    SparseVec v = *this;
    for (auto& t : v.terms_) t.c = t.c.conj();
    return v;
}

SparseVec SparseVec::axpy(const Scalar& s, const SparseVec& o) const {
    if (s.is_zero() || o.empty()) return *this;
    SparseVec v;
    auto& out = v.terms_;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].idx < o.terms_[j].idx)) {
            out.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].idx < terms_[i].idx) {
            out.push_back({o.terms_[j].idx, o.terms_[j].c * s});
            ++j;
        } else {
            Scalar c = terms_[i].c + o.terms_[j].c * s;
            if (!c.is_zero()) out.push_back({terms_[i].idx, std::move(c)});
            ++i;
            ++j;
        }
    }
    return v;
}

bool operator==(const SparseVec& a, const SparseVec& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
        if (a.terms_[k].idx != b.terms_[k].idx || !(a.terms_[k].c == b.terms_[k].c)) return false;
    return true;
}

SparseVec SparseVec::tensor(const SparseVec& a, const SparseVec& b, Index dim_b) {
    SparseVec v;
    v.terms_.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) v.terms_.push_back({x.idx * dim_b + y.idx, x.c * y.c});
    return v;  // already sorted: mixed radix with a most significant
}

void Accumulator::add(const SparseVec& v, const Scalar& s) {
    if (s.is_one())
        for (const auto& t : v) buf_.push_back(t);
    else if (!s.is_zero())
        for (const auto& t : v) buf_.push_back({t.idx, t.c * s});
}

SparseVec Accumulator::take() {
    SparseVec v = SparseVec::from_terms(std::move(buf_));
    buf_.clear();
    return v;
}

std::string format_vec(const Space& s, const SparseVec& v) {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& t : v) {
        std::string c = t.c.str();
        bool compound = !t.c.is_real() && !t.c.re().is_zero();
        if (!out.empty()) out += " + ";
        if (t.c.is_one())
            out += s.label(t.idx);
        else
            out += (compound ? "(" + c + ")" : c) + "*" + s.label(t.idx);
    }
    return out;
}

std::string Element::str() const { return format_vec(space, vec); }

Element tensor_element(const Element& u, const Element& v) {
    return {Space::tensor({u.space, v.space}), SparseVec::tensor(u.vec, v.vec, v.space.dim())};
}

}  // namespace mhf
