#pragma once

/// Induction from the subgroup H̄ = <σ^m> of the cyclic group H = <σ> of
/// order s: B = Z[H] ⊗_{Z[H̄]} A with σ·(a_0, …, a_{m-1}) =
/// (σ^m·a_{m-1}, a_0, …, a_{m-2}), and the projection π(b) = a_0, which maps
/// B^(χ) bijectively onto A^(χ|_H̄).

#include <vector>

#include "ptower/module.hpp"

namespace ptower::alg {

struct InducedEigenReport {
    u64 s = 1;
    u64 m = 1;
    UnitCharacter chi;
    u64 size_B_chi = 0;
    u64 size_A_chi = 0;
    bool projection_bijective = false;
    bool exhaustive_cross_check = false; // full enumeration of B was feasible and agreed
};

/// A is the H̄-module (its acting generator is σ^m, acting order s/m); χ is a
/// character of H with modulus a multiple of the exponent of A.
InducedEigenReport induce_and_project(const CyclicActionModule& A, u64 s, u64 m,
                                      const UnitCharacter& chi);

} // namespace ptower::alg
