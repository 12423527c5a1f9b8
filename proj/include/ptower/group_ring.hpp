#pragma once

/// The group ring Z/p^nZ[H] for cyclic H of order s, as coefficient vectors
/// indexed by h^0..h^(s-1); multiplication is cyclic convolution.

#include <vector>

#include "ptower/characters.hpp"
#include "ptower/zmodn.hpp"

namespace ptower::alg {

struct GroupRingElem {
    Modulus mod;
    std::vector<u64> coeffs; // length s

    GroupRingElem(Modulus m, std::vector<u64> c) : mod(m), coeffs(std::move(c)) {
        for (auto& x : coeffs) x %= mod.value;
    }
    static GroupRingElem zero(Modulus m, u64 s) { return {m, std::vector<u64>(s, 0)}; }
    static GroupRingElem one(Modulus m, u64 s) {
        std::vector<u64> c(s, 0);
        c[0] = 1;
        return {m, c};
    }

    u64 s() const { return coeffs.size(); }

    friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
        GroupRingElem r = a;
        for (u64 i = 0; i < r.s(); ++i) r.coeffs[i] = addmod(r.coeffs[i], b.coeffs[i], r.mod.value);
        return r;
    }
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
        GroupRingElem r = zero(a.mod, a.s());
        for (u64 i = 0; i < a.s(); ++i) {
            if (a.coeffs[i] == 0) continue;
            for (u64 j = 0; j < b.s(); ++j)
                r.coeffs[(i + j) % a.s()] =
                    addmod(r.coeffs[(i + j) % a.s()], mulmod(a.coeffs[i], b.coeffs[j], a.mod.value),
                           a.mod.value);
        }
        return r;
    }

    GroupRingElem scaled(u64 c) const {
        GroupRingElem r = *this;
        for (auto& x : r.coeffs) x = mulmod(x, c, mod.value);
        return r;
    }

    // Left multiplication by the generator h: shifts coefficients.
    GroupRingElem h_times() const {
        GroupRingElem r = *this;
        for (u64 i = 0; i < s(); ++i) r.coeffs[(i + 1) % s()] = coeffs[i];
        return r;
    }

    bool operator==(const GroupRingElem& o) const { return coeffs == o.coeffs; }
};

/// The s orthogonal idempotents e_i = t·Σ_j γ_i^{-j} h^j of Z/p^nZ[H], where
/// ts ≡ 1 (mod p^n), one per character, in the order of enumerate_characters.
/// Computed from the closed formula directly (not by CRT).
std::vector<GroupRingElem> idempotents(const Modulus& mod, u64 s);

/// Same formula for one character.
GroupRingElem idempotent_for(const Modulus& mod, const UnitCharacter& chi);

} // namespace ptower::alg
