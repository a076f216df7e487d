#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mhforge/algebra.hpp"

namespace mhf {

// Comultiplication data in covered form:
//   t1(x⊗y) = Δ(x)(1⊗y),   t2(x⊗y) = (x⊗1)Δ(y).
// `delta` is present only when the algebra is unital, where Δ(x) = t1(x⊗1).
struct CoStructure {
    LinearMap t1;
    LinearMap t2;
    LinearMap counit;    // A → k
    LinearMap antipode;  // A → A
    std::optional<LinearMap> antipode_inv;
    std::optional<LinearMap> delta;  // A → A⊗A
};

class Hopf {
public:
    Hopf() = default;
    Hopf(Algebra alg, CoStructure co) : alg_(std::move(alg)), co_(std::move(co)) {}
    // Unital construction from Δ itself; the covers are derived from it.
    static Hopf from_delta(const Algebra& alg, const LinearMap& delta, const LinearMap& counit,
                           const LinearMap& antipode, std::optional<LinearMap> antipode_inv = std::nullopt);

    const Algebra& alg() const { return alg_; }
    const CoStructure& co() const { return co_; }
    const std::string& name() const { return alg_.name(); }
    const Space& space() const { return alg_.space(); }
    Index dim() const { return alg_.dim(); }
    bool unital() const { return co_.delta.has_value(); }

    const LinearMap& delta() const;
    const LinearMap& antipode() const { return co_.antipode; }
    // Stored S⁻¹, or the inverse computed on demand for finite algebras.
    LinearMap antipode_inverse() const;
    Scalar counit(Index i) const;

    Hopf renamed(std::string name) const;
    Hopf with_antipode_inverse(LinearMap inv) const;

private:
    Algebra alg_;
    CoStructure co_;
};

// Q^cop: flipped coproduct, antipode S⁻¹.  Q^op: opposite product, antipode S⁻¹.
Hopf coopposite(const Hopf& h);
Hopf opposite(const Hopf& h);
Hopf tensor_hopf(const Hopf& a, const Hopf& b);

// Δ(x) covered on either side.  Unital objects only.
LinearMap delta_map(const Hopf& h);

Verdict check_comultiplication(const Hopf& h);
Verdict check_multiplier_hopf(const Hopf& h);
Verdict check_regular(const Hopf& h);
Verdict check_star_hopf(const Hopf& h);
Verdict certify_hopf(const Hopf& h);  // all of the above that apply

// Integrals: left φ means (id⊗φ)Δ(a) = φ(a)1, checked as
// (id⊗φ)t2(b⊗a) = φ(a)b; right ψ means (ψ⊗id)Δ(a) = ψ(a)1, checked as
// (ψ⊗id)t1(a⊗b) = ψ(a)b.  A functional is a map A → k.
enum class Side { Left, Right };
Condition check_integral(const Hopf& h, const LinearMap& functional, Side side);
// Basis of the space of integrals on one side (finite algebras).
std::vector<LinearMap> solve_integrals(const Hopf& h, Side side);
LinearMap functional_from(const Space& s, const SparseVec& values);  // values[i] = φ(e_i)

// δ with (φ⊗id)Δ(b) = φ(b)δ, for a left integral φ on a unital object.
struct ModularResult {
    Multiplier delta;
    SparseVec element;
    Condition certificate;
};
ModularResult modular_element(const Hopf& h, const LinearMap& left_integral);

// Finite dual pairing ⟨x, f⟩ between Q and Q̂.
struct Pairing {
    Hopf q;
    Hopf qhat;
    LinearMap form;  // Q⊗Q̂ → k
    Scalar value(Index x, Index f) const;
};
Verdict check_pairing(const Pairing& p);

}  // namespace mhf
