#pragma once

#include <string>
#include <vector>

#include "mhforge/scalar.hpp"
#include "mhforge/space.hpp"

namespace mhf {

struct Term {
    Index idx;
    Scalar c;
};

// Sorted, zero-free list of (basis index, coefficient).
class SparseVec {
public:
    SparseVec() = default;
    static SparseVec unit(Index i, Scalar c = Scalar(1));
    // Sorts and merges arbitrary terms; drops zeros.
    static SparseVec from_terms(std::vector<Term> terms);

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    const Term& operator[](std::size_t k) const { return terms_[k]; }
    const std::vector<Term>& terms() const { return terms_; }

    Scalar coeff(Index i) const;
    Index lead() const { return terms_.front().idx; }

    SparseVec scaled(const Scalar& s) const;
    SparseVec conj() const;
    // this + s*other
    SparseVec axpy(const Scalar& s, const SparseVec& other) const;

    friend SparseVec operator+(const SparseVec& a, const SparseVec& b) { return a.axpy(Scalar(1), b); }
    friend SparseVec operator-(const SparseVec& a, const SparseVec& b) { return a.axpy(Scalar(-1), b); }
    friend bool operator==(const SparseVec& a, const SparseVec& b);

    // Coefficients of a ⊗ b where b lives in a space of dimension dim_b.
    static SparseVec tensor(const SparseVec& a, const SparseVec& b, Index dim_b);

private:
    std::vector<Term> terms_;
};

// Collects terms in any order; take() sorts and merges.
class Accumulator {
public:
    void add(Index i, const Scalar& c) {
        if (!c.is_zero()) buf_.push_back({i, c});
    }
    void add(const SparseVec& v, const Scalar& s = Scalar(1));
    SparseVec take();
    void clear() { buf_.clear(); }

private:
    std::vector<Term> buf_;
};

// An element of a named space.
struct Element {
    Space space;
    SparseVec vec;

    static Element basis(const Space& s, Index i) { return {s, SparseVec::unit(i)}; }
    bool is_zero() const { return vec.empty(); }
    std::string str() const;
};

Element tensor_element(const Element& u, const Element& v);
std::string format_vec(const Space& s, const SparseVec& v);

}  // namespace mhf
