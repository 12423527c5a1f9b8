#pragma once

/// Degree-p Kummer steps K = L(c^(1/p)) over an L-level iterated Laurent
/// field (μ_p in the residue): the classification of the extension data by
/// the valuation of c, plus the power-class decomposition L*/L*^p with its
/// Galois eigencomponents.

#include <string>
#include <vector>

#include "ptower/laurent.hpp"
#include "ptower/module.hpp"
#include "ptower/valued_field.hpp"

namespace ptower::valn {

struct LLevelData {
    LaurentField field; // residue contains μ_p: p | q - 1
    u64 p;

    LLevelData(LaurentField f, u64 prime) : field(std::move(f)), p(prime) {
        if ((field.coeff_field().order() - 1) % p != 0)
            throw domain_error("LLevelData: residue field must contain μ_p");
    }
};

struct KummerCaseReport {
    KummerCase code = KummerCase::I;
    std::vector<i64> valuation;      // w(c)
    LexValueGroup gamma_R;           // value group upstairs
    u64 residue_degree = 1;          // [R̄ : W̄]
    u64 num_extensions = 1;          // extensions of W to K
    bool residue_class_pth_power = false; // for the normalized unit (cases II/III)

    explicit KummerCaseReport(LexValueGroup g) : gamma_R(std::move(g)) {}
};

/// Case I: w(c) ∉ pΓ (Γ gains (1/p)w(c), unique extension).
/// Case II: w(c) ∈ pΓ and the normalized residue is not a p-th power
/// (residue degree p, unique extension).
/// Case III: the normalized residue is a p-th power (p extensions).
/// The p-th-power test enumerates the finite residue field.
KummerCaseReport classify_kummer_case(const LLevelData& data, const LaurentField::Elem& c);

struct LaurentClassReport {
    u64 s = 1;          // |H| = [k(μ_p) : k]
    u64 alpha_gamma = 1; // α(Frob) mod p
    std::vector<std::string> coordinate_labels; // residue classes, then uniformizers
    alg::CyclicActionModule module;             // (Z/p)^(1+rank) with the H-action
    bool residue_coordinate_alpha_eigen = false;
    bool uniformizers_trivial_eigen = false;
    bool uniformizers_alpha_eigen = false; // true only when α is trivial (s = 1)
    bool descent_obstruction = false;      // s > 1: uniformizer classes descend to no cyclic ext
};

/// L*/L*^p ≅ (k(μ_p)*/^p) ⊕ (Z/p per uniformizer) as an H-module; H fixes the
/// uniformizer classes and acts on the residue classes by Frobenius.
LaurentClassReport laurent_power_classes(u64 q, u64 p, u64 rank);

} // namespace ptower::valn
