#include "mhforge/echelon.hpp"

#include "mhforge/error.hpp"

namespace mhf {

void Echelon::reduce(SparseVec& v, SparseVec& tag) const {
    // Eliminate the smallest pivoted index repeatedly.  Pivot vectors only
    // have entries at or after their lead, so already-skipped indices never
    // reappear.
    std::size_t pos = 0;
    while (pos < v.size()) {
        Index lead = v[pos].idx;
        auto it = by_lead_.find(lead);
        if (it == by_lead_.end()) {
            ++pos;
            continue;
        }
        const Pivot& p = pivots_[it->second];
        Scalar c = -(v[pos].c / p.vec[0].c);
        v = v.axpy(c, p.vec);
        tag = tag.axpy(c, p.tag);
        // entries before pos are unchanged, entry at pos is gone
    }
}

bool Echelon::insert(const SparseVec& v0, const SparseVec& tag0) {
    SparseVec v = v0, tag = tag0;
    reduce(v, tag);
    if (v.empty()) {
        relation_ = tag;
        return false;
    }
    // choose the first non-pivot index as lead; v has no pivot entries left
    // except possibly after it, which is fine for the elimination order
    Index lead = v.lead();
    by_lead_.emplace(lead, pivots_.size());
    pivots_.push_back({std::move(v), std::move(tag)});
    relation_ = {};
    return true;
}

std::optional<SparseVec> Echelon::express(const SparseVec& target) const {
    SparseVec v = target, tag;
    reduce(v, tag);
    if (!v.empty()) return std::nullopt;
    return tag.scaled(Scalar(-1));
}

RankResult map_rank(const LinearMap& m, const std::vector<Index>* columns) {
    Echelon ech;
    RankResult out;
    Index n = columns ? columns->size() : m.src().dim();
    for (Index k = 0; k < n; ++k) {
        Index c = columns ? (*columns)[k] : k;
        if (!ech.insert(m.column(c), SparseVec::unit(c)) && !out.kernel_witness) out.kernel_witness = ech.last_relation();
    }
    out.rank = ech.rank();
    return out;
}

LinearMap map_inverse(const LinearMap& m) {
    if (m.src().dim() != m.tgt().dim())
        throw SingularMap("map between spaces of different dimension is not invertible", Element{m.src(), {}});
    Echelon ech;
    for (Index c = 0; c < m.src().dim(); ++c)
        if (!ech.insert(m.column(c), SparseVec::unit(c)))
            throw SingularMap("map " + m.src().name() + " -> " + m.tgt().name() + " is singular",
                              Element{m.src(), ech.last_relation()});
    std::vector<SparseVec> cols(m.tgt().dim());
    for (Index i = 0; i < m.tgt().dim(); ++i) cols[i] = *ech.express(SparseVec::unit(i));
    return LinearMap::from_columns(m.tgt(), m.src(), std::move(cols));
}

std::vector<SparseVec> kernel_basis(const LinearMap& m) {
    Echelon ech;
    std::vector<SparseVec> out;
    for (Index c = 0; c < m.src().dim(); ++c)
        if (!ech.insert(m.column(c), SparseVec::unit(c))) out.push_back(ech.last_relation());
    return out;
}

std::optional<SparseVec> solve(const LinearMap& m, const SparseVec& y) {
    Echelon ech;
    for (Index c = 0; c < m.src().dim(); ++c) ech.insert(m.column(c), SparseVec::unit(c));
    return ech.express(y);
}

}  // namespace mhf
