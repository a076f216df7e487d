#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mhforge/linear_map.hpp"
#include "mhforge/verdict.hpp"

namespace mhf {

enum class Field { Rational, Gaussian };

// How local units are produced for finite element sets.
enum class LocalUnitStrategy {
    None,
    Unital,       // e = f = 1
    Idempotents,  // basis of orthogonal idempotents: indicator of the support union
};

// Finite-dimensional algebra given by structure constants e_i e_j = Σ c_ij^k e_k.
// A check domain restricts verification to a subset of the basis; it is
// used for finite windows of an infinite basis, where the ambient space is
// large enough that every product of window elements is known.
class Algebra {
public:
    struct Data {
        std::string name;
        Space space;
        std::vector<SparseVec> table;  // index i*dim + j
        std::optional<SparseVec> unit;
        std::optional<std::vector<SparseVec>> star;  // conjugate-linear, images of basis elements
        Field field = Field::Rational;
        LocalUnitStrategy local_units = LocalUnitStrategy::None;
        std::optional<std::vector<Index>> domain;
    };

    Algebra() = default;
    explicit Algebra(Data d);
    // Structure constants from a multiplication map A⊗A → A.
    static Algebra from_product(std::string name, const Space& space, const LinearMap& mul);

    const std::string& name() const { return d_->name; }
    const Space& space() const { return d_->space; }
    Index dim() const { return d_->space.dim(); }
    Field field() const { return d_->field; }
    const Data& data() const { return *d_; }

    const SparseVec& product(Index i, Index j) const { return d_->table[i * dim() + j]; }
    SparseVec mul(const SparseVec& a, const SparseVec& b) const;
    Element mul(const Element& a, const Element& b) const;
    LinearMap mul_map() const;  // A⊗A → A
    LinearMap left_mult(const SparseVec& a) const;   // x ↦ a x
    LinearMap right_mult(const SparseVec& a) const;  // x ↦ x a

    bool unital() const { return d_->unit.has_value(); }
    const SparseVec& unit() const;
    LinearMap unit_map() const;  // k → A

    bool has_star() const { return d_->star.has_value(); }
    SparseVec star(const SparseVec& a) const;

    LocalUnitStrategy local_unit_strategy() const { return d_->local_units; }
    // Basis indices that checks quantify over.
    const std::vector<Index>& domain() const;
    bool restricted() const { return d_->domain.has_value(); }

    Algebra renamed(std::string name) const;
    Algebra with_unit(std::optional<SparseVec> unit) const;
    Algebra with_star(std::optional<std::vector<SparseVec>> star) const;

    friend bool same_table(const Algebra& a, const Algebra& b);

private:
    std::shared_ptr<const Data> d_;
    std::shared_ptr<const std::vector<Index>> full_domain_;
};

Algebra tensor_algebra(const Algebra& a, const Algebra& b);
Algebra opposite_algebra(const Algebra& a);

// First structure-constant difference between two algebras on the same space.
Condition compare_tables(const std::string& id, const std::string& description, const Algebra& lhs, const Algebra& rhs);

Condition check_associative(const Algebra& a, const std::string& id);
Condition check_unit(const Algebra& a, const std::string& id);
Condition check_star(const Algebra& a, const std::string& id);
// Both stacked multiplication operators a ↦ (a e_j)_j and a ↦ (e_j a)_j are
// injective; failure carries an annihilating element.
Condition check_nondegenerate(const Algebra& a, const std::string& id);
Verdict check_algebra(const Algebra& a);

struct LocalUnits {
    SparseVec left;   // e with e s = s
    SparseVec right;  // f with s f = s
};
LocalUnits find_local_units(const Algebra& a, const std::vector<SparseVec>& elements);

// Pair (m1, m2) with m·a = m1(a), a·m = m2(a).
struct Multiplier {
    Algebra alg;
    LinearMap left;   // m1
    LinearMap right;  // m2

    static Multiplier identity(const Algebra& a);
    static Multiplier from_element(const Algebra& a, const SparseVec& x);
};

Condition check_multiplier(const Multiplier& m, const std::string& id);
Multiplier multiplier_product(const Multiplier& m, const Multiplier& n);
Multiplier multiplier_star(const Multiplier& m);
bool equal_multipliers(const Multiplier& m, const Multiplier& n);
// For unital algebras: the element x with m = from_element(x), if any.
std::optional<SparseVec> multiplier_to_element(const Multiplier& m);

}  // namespace mhf
