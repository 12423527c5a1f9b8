#pragma once

/// Formal Brauer-symbol classes: a symbol class [(a, b)_ω] carrying the
/// eigencharacters of its two slots under a cyclic Galois action. The Galois
/// image of such a class is computed by an explicit rewriting chain
/// (Galois step, root relabeling, bimultiplicative collapse) and always lands
/// in the χψα⁻¹ eigencomponent.

#include <optional>
#include <vector>

#include "ptower/characters.hpp"
#include "ptower/module.hpp"
#include "ptower/tower.hpp"

namespace ptower::symbol {

struct FormalSymbolClass {
    alg::UnitCharacter chi; // eigencharacter of [a]
    alg::UnitCharacter psi; // eigencharacter of [b]
};

/// Formal triple (u, v, w) standing for [(a^u, b^v)_{ω^w}]; exponents mod the
/// character modulus, w a unit.
struct FormalTriple {
    u64 u = 1;
    u64 v = 1;
    u64 w = 1;
};

struct EigenclassReport {
    alg::UnitCharacter eigencharacter; // χψα⁻¹
    bool rewriting_verified = false;   // the chain reproduces it on every σ
};

/// σ(a,b)_ω ≅ (a^(χ(σ)), b^(ψ(σ)))_(ω^(α(σ))) ≅ (a^(χ(σ)α(σ)⁻¹), b^(ψ(σ)))_ω,
/// and bimultiplicativity collapses the class to [(a,b)_ω]^(χψα⁻¹)(σ).
EigenclassReport galois_eigenclass(const alg::UnitCharacter& alpha, const FormalSymbolClass& cls);

/// Slots (χ, αχ⁻¹) always produce an H-fixed class.
bool prop34_fixed_check(const alg::UnitCharacter& chi, const alg::UnitCharacter& alpha);

struct SplitComponent {
    alg::UnitCharacter chi;        // class-group eigencharacter
    alg::Vec part;                 // e_i·[a]
    bool nonzero = false;
    alg::UnitCharacter symbol_char; // χ_i α⁻¹ carried by (a_i, c)_ω
};

struct EigenSplitReport {
    std::vector<SplitComponent> components;
    std::size_t alpha_index = 0;   // the unique i with χ_i = α
    bool sum_reconstructs = false; // Σ e_i·[a] = [a]
    bool unique_trivial = false;   // exactly one component has trivial symbol character
};

/// Decomposes a class along the eigendecomposition of a class-group model and
/// tags each symbol component (a_i, c)_ω with its eigencharacter (the second
/// slot is fixed, ψ = 1). Requires a semisimple acting order.
EigenSplitReport eigen_split_class(const alg::CyclicActionModule& class_group,
                                   const std::vector<alg::UnitCharacter>& chars,
                                   const alg::UnitCharacter& alpha_char, const alg::Vec& a_class);

/// The finite-field specialization: the M-level class group of a tower with
/// M = L, Frobenius acting by q.
EigenSplitReport eigen_split_class(const tower::TowerData& t, u64 a_index);

} // namespace ptower::symbol
