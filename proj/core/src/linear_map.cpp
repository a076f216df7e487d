#include "mhforge/linear_map.hpp"

#include <numeric>

#include "mhforge/error.hpp"
#include "mhforge/parallel.hpp"

namespace mhf {

namespace {

class StoredMap final : public MapImpl {
public:
    StoredMap(std::vector<SparseVec> cols, std::vector<bool> undefined)
        : cols_(std::move(cols)), undefined_(std::move(undefined)) {}
    SparseVec column(Index i) const override {
        if (!undefined_.empty() && undefined_[i]) throw WindowOverflow("column " + std::to_string(i) + " lies outside the window");
        return cols_[i];
    }
    bool defined(Index i) const override { return undefined_.empty() || !undefined_[i]; }
    const SparseVec& ref(Index i) const { return cols_[i]; }

private:
    std::vector<SparseVec> cols_;
    std::vector<bool> undefined_;
};

class FnMap final : public MapImpl {
public:
    FnMap(std::function<SparseVec(Index)> fn, std::function<bool(Index)> def)
        : fn_(std::move(fn)), def_(std::move(def)) {}
    SparseVec column(Index i) const override {
        if (def_ && !def_(i)) throw WindowOverflow("column " + std::to_string(i) + " lies outside the window");
        return fn_(i);
    }
    bool defined(Index i) const override { return !def_ || def_(i); }

private:
    std::function<SparseVec(Index)> fn_;
    std::function<bool(Index)> def_;
};

class IdentityMap final : public MapImpl {
public:
    SparseVec column(Index i) const override { return SparseVec::unit(i); }
};

class ComposedMap final : public MapImpl {
public:
    ComposedMap(LinearMap f, LinearMap g) : f_(std::move(f)), g_(std::move(g)) {}
    SparseVec column(Index i) const override { return f_.apply(g_.column(i)); }
    bool defined(Index i) const override {
        if (!g_.defined(i)) return false;
        for (const auto& t : g_.column(i))
            if (!f_.defined(t.idx)) return false;
        return true;
    }

private:
    LinearMap f_, g_;
};

class TensorMap final : public MapImpl {
public:
    TensorMap(LinearMap f, LinearMap g) : f_(std::move(f)), g_(std::move(g)) {}
    SparseVec column(Index i) const override {
        Index d = g_.src().dim();
        return SparseVec::tensor(f_.column(i / d), g_.column(i % d), g_.tgt().dim());
    }
    bool defined(Index i) const override {
        Index d = g_.src().dim();
        return f_.defined(i / d) && g_.defined(i % d);
    }

private:
    LinearMap f_, g_;
};

class SumMap final : public MapImpl {
public:
    SumMap(LinearMap f, LinearMap g) : f_(std::move(f)), g_(std::move(g)) {}
    SparseVec column(Index i) const override { return f_.column(i) + g_.column(i); }
    bool defined(Index i) const override { return f_.defined(i) && g_.defined(i); }

private:
    LinearMap f_, g_;
};

// Splits an index of a block tensor product into block indices.
struct BlockCodec {
    std::vector<Index> dims;
    void split(Index i, std::vector<Index>& out) const {
        out.resize(dims.size());
        for (std::size_t k = dims.size(); k-- > 0;) {
            out[k] = i % dims[k];
            i /= dims[k];
        }
    }
    Index join(const std::vector<Index>& parts) const {
        Index i = 0;
        for (std::size_t k = 0; k < dims.size(); ++k) i = i * dims[k] + parts[k];
        return i;
    }
};

BlockCodec codec(const std::vector<Space>& blocks) {
    BlockCodec c;
    for (const auto& b : blocks) c.dims.push_back(b.dim());
    return c;
}

// Target block k is either source block `src_pos` (when >= 0) or block
// `-src_pos - 1` of m's target.
class EmbeddedMap final : public MapImpl {
public:
    EmbeddedMap(LinearMap m, std::vector<std::size_t> legs, const std::vector<Space>& src_blocks,
                const std::vector<Space>& tgt_blocks, std::vector<long> layout, const std::vector<Space>& m_src_blocks,
                const std::vector<Space>& m_tgt_blocks)
        : m_(std::move(m)),
          legs_(std::move(legs)),
          layout_(std::move(layout)),
          src_(codec(src_blocks)),
          tgt_(codec(tgt_blocks)),
          msrc_(codec(m_src_blocks)),
          mtgt_(codec(m_tgt_blocks)) {}

    SparseVec column(Index i) const override {
        std::vector<Index> parts, sub(legs_.size()), tsub, out(layout_.size());
        src_.split(i, parts);
        for (std::size_t k = 0; k < legs_.size(); ++k) sub[k] = parts[legs_[k]];
        SparseVec img = m_.column(msrc_.join(sub));
        std::vector<Term> terms;
        terms.reserve(img.size());
        for (const auto& t : img) {
            mtgt_.split(t.idx, tsub);
            for (std::size_t k = 0; k < layout_.size(); ++k)
                out[k] = layout_[k] >= 0 ? parts[layout_[k]] : tsub[-layout_[k] - 1];
            terms.push_back({tgt_.join(out), t.c});
        }
        return SparseVec::from_terms(std::move(terms));
    }
    bool defined(Index i) const override {
        std::vector<Index> parts, sub(legs_.size());
        src_.split(i, parts);
        for (std::size_t k = 0; k < legs_.size(); ++k) sub[k] = parts[legs_[k]];
        return m_.defined(msrc_.join(sub));
    }

private:
    LinearMap m_;
    std::vector<std::size_t> legs_;
    std::vector<long> layout_;
    BlockCodec src_, tgt_, msrc_, mtgt_;
};

class PermuteMap final : public MapImpl {
public:
    PermuteMap(const std::vector<Space>& blocks, std::vector<std::size_t> perm) : src_(codec(blocks)), perm_(std::move(perm)) {
        for (auto p : perm_) tgt_.dims.push_back(src_.dims[p]);
    }
    SparseVec column(Index i) const override {
        std::vector<Index> parts, out(perm_.size());
        src_.split(i, parts);
        for (std::size_t k = 0; k < perm_.size(); ++k) out[k] = parts[perm_[k]];
        return SparseVec::unit(tgt_.join(out));
    }

private:
    BlockCodec src_, tgt_;
    std::vector<std::size_t> perm_;
};

}  // namespace

LinearMap LinearMap::from_columns(Space src, Space tgt, std::vector<SparseVec> cols, std::vector<bool> undefined) {
    if (cols.size() != src.dim()) throw InputError("column count does not match source dimension");
    if (!undefined.empty() && undefined.size() != cols.size()) throw InputError("undefined-mask size mismatch");
    for (const auto& c : cols)
        if (!c.empty() && c.terms().back().idx >= tgt.dim()) throw InputError("map column exceeds target dimension");
    return {std::move(src), std::move(tgt), std::make_shared<StoredMap>(std::move(cols), std::move(undefined))};
}

LinearMap LinearMap::from_fn(Space src, Space tgt, std::function<SparseVec(Index)> fn, std::function<bool(Index)> defined) {
    return {std::move(src), std::move(tgt), std::make_shared<FnMap>(std::move(fn), std::move(defined))};
}

LinearMap LinearMap::identity(const Space& s) { return {s, s, std::make_shared<IdentityMap>()}; }

LinearMap LinearMap::zero(const Space& src, const Space& tgt) {
    return from_columns(src, tgt, std::vector<SparseVec>(src.dim()));
}

SparseVec LinearMap::column(Index i) const {
    if (i >= src_.dim()) throw InputError("column index out of range");
    return impl_->column(i);
}

SparseVec LinearMap::apply(const SparseVec& v) const {
    if (v.empty()) return {};
    if (v.size() == 1 && v[0].c.is_one()) return impl_->column(v[0].idx);
    Accumulator acc;
    for (const auto& t : v) acc.add(impl_->column(t.idx), t.c);
    return acc.take();
}

SparseVec LinearMap::apply_conj(const SparseVec& v) const {
    Accumulator acc;
    for (const auto& t : v) acc.add(impl_->column(t.idx), t.c.conj());
    return acc.take();
}

Element LinearMap::operator()(const Element& e) const {
    if (!(e.space == src_)) throw InputError("map applied to an element of " + e.space.name() + ", expected " + src_.name());
    return {tgt_, apply(e.vec)};
}

bool LinearMap::stored() const { return dynamic_cast<const StoredMap*>(impl_.get()) != nullptr; }

LinearMap LinearMap::materialize() const {
    if (stored()) return *this;
    std::vector<bool> undefined(src_.dim(), false);
    bool any = false;
    auto cols = parallel_map<SparseVec>(src_.dim(), [&](Index i) -> SparseVec {
        if (!impl_->defined(i)) return {};
        return impl_->column(i);
    });
    for (Index i = 0; i < src_.dim(); ++i)
        if (!impl_->defined(i)) undefined[i] = any = true;
    if (!any) undefined.clear();
    return from_columns(src_, tgt_, std::move(cols), std::move(undefined));
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    if (!(f.src() == g.tgt())) throw InputError("cannot compose: " + f.src().name() + " vs " + g.tgt().name());
    return {g.src(), f.tgt(), std::make_shared<ComposedMap>(f, g)};
}

LinearMap compose(std::initializer_list<LinearMap> chain) {
    auto it = chain.end();
    LinearMap acc = *--it;
    while (it != chain.begin()) acc = compose(*--it, acc);
    return acc;
}

LinearMap tensor(const LinearMap& f, const LinearMap& g) {
    return {f.src() * g.src(), f.tgt() * g.tgt(), std::make_shared<TensorMap>(f, g)};
}

LinearMap tensor(std::initializer_list<LinearMap> maps) {
    auto it = maps.begin();
    LinearMap acc = *it++;
    for (; it != maps.end(); ++it) acc = tensor(acc, *it);
    return acc;
}

LinearMap operator+(const LinearMap& f, const LinearMap& g) {
    if (!(f.src() == g.src()) || !(f.tgt() == g.tgt())) throw InputError("cannot add maps of different shapes");
    return {f.src(), f.tgt(), std::make_shared<SumMap>(f, g)};
}

LinearMap scaled(const LinearMap& f, const Scalar& s) {
    return LinearMap::from_fn(f.src(), f.tgt(), [f, s](Index i) { return f.column(i).scaled(s); },
                              [f](Index i) { return f.defined(i); });
}

LinearMap permute_blocks(const std::vector<Space>& blocks, const std::vector<std::size_t>& perm) {
    if (perm.size() != blocks.size()) throw InputError("permutation size mismatch");
    std::vector<bool> seen(blocks.size());
    std::vector<Space> tgt;
    for (auto p : perm) {
        if (p >= blocks.size() || seen[p]) throw InputError("not a permutation");
        seen[p] = true;
        tgt.push_back(blocks[p]);
    }
    return {Space::tensor(blocks), Space::tensor(tgt), std::make_shared<PermuteMap>(blocks, perm)};
}

LinearMap flip_map(const Space& x, const Space& y) { return permute_blocks({x, y}, {1, 0}); }

LinearMap embed_leg(const LinearMap& m, const std::vector<std::size_t>& legs, const std::vector<Space>& blocks,
                    std::optional<std::vector<Space>> tgt_legs) {
    if (legs.empty()) throw InputError("embed_leg needs at least one leg");
    std::vector<bool> seen(blocks.size());
    std::vector<Space> msrc;
    for (auto l : legs) {
        if (l >= blocks.size()) throw InputError("leg position " + std::to_string(l) + " out of range");
        if (seen[l]) throw InputError("repeated leg position " + std::to_string(l));
        seen[l] = true;
        msrc.push_back(blocks[l]);
    }
    if (!(Space::tensor(msrc) == m.src()))
        throw InputError("map source " + m.src().name() + " does not match legs " + Space::tensor(msrc).name());
    std::vector<Space> mtgt;
    if (tgt_legs)
        mtgt = *tgt_legs;
    else if (m.tgt() == m.src())
        mtgt = msrc;
    else
        mtgt = {m.tgt()};
    if (!(Space::tensor(mtgt) == m.tgt())) throw InputError("target legs do not match map target " + m.tgt().name());
    std::vector<Space> tgt_blocks;
    std::vector<long> layout;
    if (mtgt.size() == legs.size()) {
        // in place: leg k of the target sits where leg k of the source was
        tgt_blocks = blocks;
        for (std::size_t p = 0; p < blocks.size(); ++p) layout.push_back(static_cast<long>(p));
        for (std::size_t k = 0; k < legs.size(); ++k) {
            tgt_blocks[legs[k]] = mtgt[k];
            layout[legs[k]] = -static_cast<long>(k) - 1;
        }
    } else {
        // the target legs replace the source legs at the position of the first one
        for (std::size_t p = 0; p < blocks.size(); ++p) {
            if (p == legs[0])
                for (std::size_t k = 0; k < mtgt.size(); ++k) {
                    tgt_blocks.push_back(mtgt[k]);
                    layout.push_back(-static_cast<long>(k) - 1);
                }
            else if (!seen[p]) {
                tgt_blocks.push_back(blocks[p]);
                layout.push_back(static_cast<long>(p));
            }
        }
    }
    return {Space::tensor(blocks), Space::tensor(tgt_blocks),
            std::make_shared<EmbeddedMap>(m, legs, blocks, tgt_blocks, layout, msrc, mtgt)};
}

std::optional<MapDifference> first_difference(const LinearMap& f, const LinearMap& g, const std::vector<Index>* domain) {
    if (!(f.src() == g.src()) || !(f.tgt() == g.tgt())) throw InputError("comparing maps of different shapes");
    Index n = domain ? domain->size() : f.src().dim();
    auto at = [&](Index k) { return domain ? (*domain)[k] : k; };
    auto hit = first_failure(n, [&](Index k) { return !(f.column(at(k)) == g.column(at(k))); });
    if (!hit) return std::nullopt;
    Index c = at(*hit);
    return MapDifference{c, f.column(c), g.column(c)};
}

bool equal_maps(const LinearMap& f, const LinearMap& g) { return !first_difference(f, g); }

}  // namespace mhf
