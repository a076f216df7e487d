#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mhf {

using Index = std::uint64_t;

// A finite basis.  Either the ground field k (dimension 1, no factors), a
// named list of labels, or a tensor product of named bases.  Tensor
// products are flattened, so (A⊗B)⊗C and A⊗(B⊗C) are the same space; the
// ground field disappears from tensor products.  Tensor indices are mixed
// radix with the first factor most significant, which makes index order the
// lexicographic order of label tuples.
class Space {
public:
    Space();  // the ground field
    static Space ground() { return Space(); }
    static Space basis(std::string name, std::vector<std::string> labels);
    static Space tensor(const std::vector<Space>& parts);

    Index dim() const;
    const std::string& name() const;
    // number of named factors: 0 for k, 1 for a plain basis
    std::size_t arity() const;
    Space factor(std::size_t k) const;
    std::vector<Space> factors() const;
    bool is_ground() const { return arity() == 0; }

    std::string label(Index i) const;
    // label tuple, one entry per factor
    std::vector<std::string> label_tuple(Index i) const;
    // Plain bases only.
    std::optional<Index> find(const std::string& label) const;
    const std::vector<std::string>& labels() const;

    void split(Index i, std::span<std::uint32_t> out) const;
    std::vector<std::uint32_t> split(Index i) const;
    Index join(std::span<const std::uint32_t> parts) const;

    friend bool operator==(const Space& a, const Space& b);

private:
    struct Data;
    explicit Space(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

inline Space operator*(const Space& a, const Space& b) { return Space::tensor({a, b}); }

}  // namespace mhf
