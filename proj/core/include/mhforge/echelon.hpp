#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "mhforge/error.hpp"
#include "mhforge/linear_map.hpp"

namespace mhf {

// Incremental sparse row echelon form over exact scalars.  Every inserted
// vector carries a tag vector recording which inserted inputs it combines,
// so dependencies come back as explicit kernel witnesses.
class Echelon {
public:
    // Returns true when v is independent of everything inserted so far.
    // When it is dependent, the combination of inputs (with v tagged as
    // `tag`) that vanishes is available from last_relation().
    bool insert(const SparseVec& v, const SparseVec& tag);
    const SparseVec& last_relation() const { return relation_; }

    std::size_t rank() const { return pivots_.size(); }

    // Writes target as Σ c_k (tag_k), when target lies in the span.
    std::optional<SparseVec> express(const SparseVec& target) const;

private:
    struct Pivot {
        SparseVec vec;
        SparseVec tag;
    };
    void reduce(SparseVec& v, SparseVec& tag) const;

    std::vector<Pivot> pivots_;
    std::unordered_map<Index, std::size_t> by_lead_;
    SparseVec relation_;
};

struct RankResult {
    std::size_t rank = 0;
    std::optional<SparseVec> kernel_witness;  // a nonzero source vector mapped to 0
};

// Rank of m restricted to `columns` (all columns when null); the witness is
// the first dependency found in column order.
RankResult map_rank(const LinearMap& m, const std::vector<Index>* columns = nullptr);

// Two-sided inverse of a square map, or MathError carrying a kernel element.
class SingularMap : public MathError {
public:
    SingularMap(const std::string& what, Element witness) : MathError(what), witness_(std::move(witness)) {}
    const Element& witness() const { return witness_; }

private:
    Element witness_;
};
LinearMap map_inverse(const LinearMap& m);

// All x with m(x) = 0, as a basis (in echelon order of discovery).
std::vector<SparseVec> kernel_basis(const LinearMap& m);

// Some x with m(x) = y.
std::optional<SparseVec> solve(const LinearMap& m, const SparseVec& y);

}  // namespace mhf
