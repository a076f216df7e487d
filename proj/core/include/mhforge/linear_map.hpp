#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "mhforge/sparse.hpp"

namespace mhf {

// Column source for a linear map.  Stored maps keep every column; lazy maps
// (compositions, leg embeddings, tensor products) compute columns on demand
// from their parts, so operator identities on large tensor powers can be
// checked column by column without materializing anything.
class MapImpl {
public:
    virtual ~MapImpl() = default;
    virtual SparseVec column(Index i) const = 0;
    virtual bool defined(Index) const { return true; }
};

class LinearMap {
public:
    LinearMap() = default;
    LinearMap(Space src, Space tgt, std::shared_ptr<const MapImpl> impl)
        : src_(std::move(src)), tgt_(std::move(tgt)), impl_(std::move(impl)) {}

    // `undefined` marks columns outside the region where a partial map is
    // known (finite windows of an infinite basis).
    static LinearMap from_columns(Space src, Space tgt, std::vector<SparseVec> cols,
                                  std::vector<bool> undefined = {});
    static LinearMap from_fn(Space src, Space tgt, std::function<SparseVec(Index)> fn,
                             std::function<bool(Index)> defined = {});
    static LinearMap identity(const Space& s);
    static LinearMap zero(const Space& src, const Space& tgt);

    const Space& src() const { return src_; }
    const Space& tgt() const { return tgt_; }
    bool valid() const { return static_cast<bool>(impl_); }

    // Throws WindowOverflow on an undefined column.
    SparseVec column(Index i) const;
    bool defined(Index i) const { return impl_->defined(i); }
    SparseVec apply(const SparseVec& v) const;
    Element operator()(const Element& e) const;
    // Treats the map as conjugate-linear: apply(Σ c_i e_i) = Σ conj(c_i) col_i.
    SparseVec apply_conj(const SparseVec& v) const;

    LinearMap materialize() const;
    bool stored() const;

private:
    Space src_, tgt_;
    std::shared_ptr<const MapImpl> impl_;
};

// f∘g
LinearMap compose(const LinearMap& f, const LinearMap& g);
LinearMap compose(std::initializer_list<LinearMap> chain);  // chain applied right to left
LinearMap tensor(const LinearMap& f, const LinearMap& g);
LinearMap tensor(std::initializer_list<LinearMap> maps);
LinearMap operator+(const LinearMap& f, const LinearMap& g);
LinearMap scaled(const LinearMap& f, const Scalar& s);

// Rearranges blocks: target block k is source block perm[k].
LinearMap permute_blocks(const std::vector<Space>& blocks, const std::vector<std::size_t>& perm);
// τ: X⊗Y → Y⊗X
LinearMap flip_map(const Space& x, const Space& y);

// Acts as m on the blocks at `legs` (in the order m expects them) and as the
// identity elsewhere.  m's target is split into `tgt_legs` (default: m's
// source blocks for an endomorphism, else m's target as one block).  With as many
// target legs as source legs the result is written in place; otherwise the
// target legs replace the source legs at the position of legs[0] (so
// multiplication of legs 0 and 2 of Q⊗A⊗Q lands in (Q)⊗A).
LinearMap embed_leg(const LinearMap& m, const std::vector<std::size_t>& legs, const std::vector<Space>& blocks,
                    std::optional<std::vector<Space>> tgt_legs = std::nullopt);

struct MapDifference {
    Index column;
    SparseVec lhs, rhs;
};
// First column (in index order, restricted to `domain` when given) where f and g differ.
std::optional<MapDifference> first_difference(const LinearMap& f, const LinearMap& g,
                                              const std::vector<Index>* domain = nullptr);
bool equal_maps(const LinearMap& f, const LinearMap& g);

}  // namespace mhf
