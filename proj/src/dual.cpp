#include "ptower/dual.hpp"

namespace ptower::alg {

u64 DualModule::pairing(const Vec& a, const Vec& psi) const {
    const auto& mod = base.modulus();
    u64 acc = 0;
    for (std::size_t i = 0; i < base.rank(); ++i) {
        u64 w = checked_pow(mod.p, mod.n - base.parts()[i]);
        acc = addmod(acc, mulmod(mulmod(a[i], psi[i], mod.value), w, mod.value), mod.value);
    }
    return acc;
}

DualModule make_dual(const CyclicActionModule& A) {
    const auto& mod = A.modulus();
    std::size_t r = A.rank();
    Mat inv = A.mat_pow(A.action(), A.acting_order() - 1); // T^-1
    Mat D;
    D.rows.assign(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            u64 s = inv.rows[j][i]; // canonical rep mod p^{k_j}
            u64 ki = A.parts()[i], kj = A.parts()[j];
            if (ki >= kj) {
                D.rows[i][j] = mulmod(s, checked_pow(mod.p, ki - kj), A.part_mods()[i]);
            } else {
                u64 div = checked_pow(mod.p, kj - ki);
                require(s % div == 0, "make_dual: inverse action entry not divisible");
                D.rows[i][j] = (s / div) % A.part_mods()[i];
            }
        }
    }
    DualModule dm{A, CyclicActionModule(mod, A.parts(), D, A.acting_order())};
    // H-equivariance B(h·a, h·ψ) = B(a, ψ) on basis pairs (bilinear, so this
    // settles all pairs).
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Vec a = dm.base.zero(), psi = dm.dual.zero();
            a[i] = 1;
            psi[j] = 1;
            require(dm.pairing(dm.base.act(a), dm.dual.act(psi)) == dm.pairing(a, psi),
                    "make_dual: pairing is not equivariant");
        }
    return dm;
}

DualDecomposition dual_decompose(const CyclicActionModule& A,
                                 const std::vector<UnitCharacter>& chars) {
    DualDecomposition d{make_dual(A), chars, {}, {}, {}};
    const auto& mod = A.modulus();
    for (const auto& chi : chars) {
        d.base_eigen.push_back(d.pair.base.eigencomponent(chi));
        d.dual_eigen.push_back(d.pair.dual.eigencomponent(chi));
    }

    d.orthogonality_ok = true;
    d.nondegeneracy_ok = true;
    d.sizes_match = true;
    for (std::size_t i = 0; i < chars.size(); ++i) {
        UnitCharacter inv_i = chars[i].inverse();
        // |A^(χ)| = |X^(χ⁻¹)|
        std::size_t j_inv = chars.size();
        for (std::size_t j = 0; j < chars.size(); ++j)
            if (chars[j] == inv_i) j_inv = j;
        if (j_inv < chars.size() &&
            d.base_eigen[i].order() != d.dual_eigen[j_inv].order())
            d.sizes_match = false;

        for (std::size_t j = 0; j < chars.size(); ++j) {
            bool inverse_pair = chars[j] == inv_i;
            // Orthogonality is forced when 1 - χ_i(h)χ_j(h) is a unit.
            u64 prod = mulmod(chars[i].gamma % mod.value, chars[j].gamma % mod.value, mod.value);
            bool unit_cond = mod.is_unit(submod(1, prod, mod.value));
            bool all_zero = true;
            bool base_nondeg = true;
            for (u64 ka : d.base_eigen[i].elem_keys) {
                Vec a = d.pair.base.decode(ka);
                bool hit = false;
                for (u64 kp : d.dual_eigen[j].elem_keys) {
                    if (d.pair.pairing(a, d.pair.dual.decode(kp)) != 0) {
                        hit = true;
                        all_zero = false;
                    }
                }
                if (ka != 0 && !hit) base_nondeg = false;
            }
            if (!inverse_pair && unit_cond && !all_zero) d.orthogonality_ok = false;
            if (inverse_pair) {
                // Nondegenerate on the paired components, both sides.
                if (!base_nondeg) d.nondegeneracy_ok = false;
                for (u64 kp : d.dual_eigen[j].elem_keys) {
                    if (kp == 0) continue;
                    Vec psi = d.pair.dual.decode(kp);
                    bool hit = false;
                    for (u64 ka : d.base_eigen[i].elem_keys)
                        if (d.pair.pairing(d.pair.base.decode(ka), psi) != 0) hit = true;
                    if (!hit) d.nondegeneracy_ok = false;
                }
            }
        }

        // Perp of X^(χ_i⁻¹) inside A.
        std::vector<u64> perp_keys;
        const auto& dual_side =
            j_inv < chars.size() ? d.dual_eigen[j_inv] : d.pair.dual.eigencomponent(inv_i);
        for (u64 ka = 0; ka < A.order(); ++ka) {
            Vec a = d.pair.base.decode(ka);
            bool kills = true;
            for (u64 kp : dual_side.elem_keys)
                if (d.pair.pairing(a, d.pair.dual.decode(kp)) != 0) {
                    kills = false;
                    break;
                }
            if (kills) perp_keys.push_back(ka);
        }
        d.perps.push_back(d.pair.base.submodule_from_keys(std::move(perp_keys)));
    }
    return d;
}

} // namespace ptower::alg
