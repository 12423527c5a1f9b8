#pragma once

/// Pontryagin-style duality for cyclic-action modules: X(A) = Hom(A, p^-n Z/Z)
/// with the contragredient action (h·ψ)(a) = ψ(h⁻¹·a), the evaluation pairing
/// B(a, ψ) = ψ(a), and the eigen-orthogonality report: B kills
/// A^(χ_i) × X^(χ_j) unless χ_j = χ_i⁻¹, where it is nondegenerate.

#include <vector>

#include "ptower/module.hpp"

namespace ptower::alg {

struct DualModule {
    CyclicActionModule base;
    CyclicActionModule dual;

    /// B(a, ψ) as an element of p^-n Z/Z, returned as the numerator mod p^n.
    u64 pairing(const Vec& a, const Vec& psi) const;
};

DualModule make_dual(const CyclicActionModule& A);

struct DualDecomposition {
    DualModule pair;
    std::vector<UnitCharacter> chars;
    std::vector<CyclicActionModule::Submodule> base_eigen;
    std::vector<CyclicActionModule::Submodule> dual_eigen;
    /// perp[i] = { a in A : B(a, ψ) = 0 for every ψ in X^(χ_i⁻¹) }.
    std::vector<CyclicActionModule::Submodule> perps;
    bool orthogonality_ok = false;
    bool nondegeneracy_ok = false;
    bool sizes_match = false; // |A^(χ)| = |X^(χ⁻¹)| for every χ

    bool all_ok() const { return orthogonality_ok && nondegeneracy_ok && sizes_match; }
};

/// Runs the full orthogonality/nondegeneracy verification over the given
/// character list. The unless-inverse orthogonality is asserted whenever
/// 1 - χ_i(h)χ_j(h) is a unit (always the case for semisimple acting order).
DualDecomposition dual_decompose(const CyclicActionModule& A,
                                 const std::vector<UnitCharacter>& chars);

} // namespace ptower::alg
