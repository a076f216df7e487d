#include "mhforge/space.hpp"

#include <unordered_map>

#include "mhforge/error.hpp"

namespace mhf {

struct Space::Data {
    std::string name;
    std::vector<std::string> labels;                 // plain basis only
    std::unordered_map<std::string, Index> lookup;   // plain basis only
    std::vector<Space> parts;                        // tensor only (length >= 2)
    std::vector<Index> radix;                        // dims of parts
    Index dim = 1;
    std::string sig;
    bool ground = false;
};

Space::Space() {
    static const auto k = [] {
        auto d = std::make_shared<Data>();
        d->name = "k";
        d->dim = 1;
        d->sig = "k";
        d->ground = true;
        return std::shared_ptr<const Data>(std::move(d));
    }();
    d_ = k;
}

Space Space::basis(std::string name, std::vector<std::string> labels) {
    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->dim = labels.size();
    for (Index i = 0; i < labels.size(); ++i)
        if (!d->lookup.emplace(labels[i], i).second)
            throw InputError("duplicate basis label '" + labels[i] + "' in space " + d->name);
    d->labels = std::move(labels);
    d->sig = d->name + "[";
    for (const auto& l : d->labels) d->sig += l + ";";
    d->sig += "]";
    return Space(std::move(d));
}

Space Space::tensor(const std::vector<Space>& in) {
    std::vector<Space> flat;
    for (const auto& s : in) {
        if (s.arity() == 0) continue;
        if (s.arity() == 1)
            flat.push_back(s);
        else
            for (const auto& p : s.d_->parts) flat.push_back(p);
    }
    if (flat.empty()) return Space();
    if (flat.size() == 1) return flat[0];
    auto d = std::make_shared<Data>();
    d->dim = 1;
    for (std::size_t k = 0; k < flat.size(); ++k) {
        if (k) {
            d->name += "⊗";
            d->sig += "⊗";
        }
        d->name += flat[k].name();
        d->sig += flat[k].d_->sig;
        d->radix.push_back(flat[k].dim());
        d->dim *= flat[k].dim();
    }
    d->parts = std::move(flat);
    return Space(std::move(d));
}

Index Space::dim() const { return d_->dim; }
const std::string& Space::name() const { return d_->name; }

std::size_t Space::arity() const {
    if (!d_->parts.empty()) return d_->parts.size();
    return d_->ground ? 0 : 1;
}

Space Space::factor(std::size_t k) const {
    if (!d_->parts.empty()) return d_->parts.at(k);
    if (k != 0 || arity() == 0) throw InputError("factor index out of range");
    return *this;
}

std::vector<Space> Space::factors() const {
    if (!d_->parts.empty()) return d_->parts;
    if (arity() == 0) return {};
    return {*this};
}

const std::vector<std::string>& Space::labels() const { return d_->labels; }

std::string Space::label(Index i) const {
    if (arity() == 0) return "1";
    if (d_->parts.empty()) return d_->labels.at(i);
    auto t = label_tuple(i);
    std::string s = "(";
    for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + t[k];
    return s + ")";
}

std::vector<std::string> Space::label_tuple(Index i) const {
    if (arity() == 0) return {};
    if (d_->parts.empty()) return {d_->labels.at(i)};
    auto idx = split(i);
    std::vector<std::string> out;
    for (std::size_t k = 0; k < idx.size(); ++k) out.push_back(d_->parts[k].d_->labels[idx[k]]);
    return out;
}

std::optional<Index> Space::find(const std::string& label) const {
    auto it = d_->lookup.find(label);
    if (it == d_->lookup.end()) return std::nullopt;
    return it->second;
}

void Space::split(Index i, std::span<std::uint32_t> out) const {
    const auto& r = d_->radix;
    if (r.empty()) {
        if (!out.empty()) out[0] = static_cast<std::uint32_t>(i);
        return;
    }
    for (std::size_t k = r.size(); k-- > 0;) {
        out[k] = static_cast<std::uint32_t>(i % r[k]);
        i /= r[k];
    }
}

std::vector<std::uint32_t> Space::split(Index i) const {
    std::vector<std::uint32_t> out(std::max<std::size_t>(arity(), 1));
    split(i, out);
    return out;
}

Index Space::join(std::span<const std::uint32_t> parts) const {
    const auto& r = d_->radix;
    if (r.empty()) return parts.empty() ? 0 : parts[0];
    Index i = 0;
    for (std::size_t k = 0; k < r.size(); ++k) i = i * r[k] + parts[k];
    return i;
}

bool operator==(const Space& a, const Space& b) { return a.d_ == b.d_ || a.d_->sig == b.d_->sig; }

}  // namespace mhf
