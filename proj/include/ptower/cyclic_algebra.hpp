#pragma once

/// Cyclic algebra presentations (C/F, σ, b) of degree p^n over a finite field
/// F, and the cyclicity-witness criterion: the standard generator x satisfies
/// x^(p^n) = b, and it certifies cyclicity exactly when b is not a p-th power
/// in F*; otherwise δ = x^(p^(n-1))·d⁻¹ (with d^p = b) is a p-torsion
/// element outside F, which is the obstruction.

#include <optional>

#include "ptower/finite_field.hpp"

namespace ptower::symbol {

struct CyclicAlgebraPresentation {
    Fq base;   // F
    u64 p = 3; // odd prime
    u64 n = 1; // [C : F] = p^n
    Fq::Elem b;
};

/// c·x^t with c in F (F-coefficients commute with x since σ fixes F).
struct AlgebraMonomial {
    Fq::Elem coeff;
    u64 xpow = 0;
};

struct CyclicityResult {
    bool witness_found = false;
    AlgebraMonomial witness;              // x, when b ∉ F*^p
    bool witness_power_is_b = false;      // x^(p^n) = b in the presentation
    std::optional<AlgebraMonomial> delta; // obstruction element when b ∈ F*^p
    bool delta_power_is_one = false;      // δ^p = 1 verified by monomial arithmetic
};

CyclicityResult cyclicity_witness(const CyclicAlgebraPresentation& pres);

/// Monomial product in the presentation (reduces x^(p^n) to b).
AlgebraMonomial monomial_mul(const CyclicAlgebraPresentation& pres, const AlgebraMonomial& u,
                             const AlgebraMonomial& v);
AlgebraMonomial monomial_pow(const CyclicAlgebraPresentation& pres, AlgebraMonomial u, u64 e);

} // namespace ptower::symbol
