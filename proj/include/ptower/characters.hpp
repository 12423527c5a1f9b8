#pragma once

/// Characters of a cyclic group H = <h> of order s with values in (Z/eZ)*.
/// A character is stored by its generator image γ alone; χ(h^j) = γ^j.

#include <vector>

#include "ptower/zmodn.hpp"

namespace ptower::alg {

struct UnitCharacter {
    u64 modulus = 1;  // e: values live in (Z/eZ)*
    u64 order_s = 1;  // |H|
    u64 gamma = 1;    // χ(h), with γ^s ≡ 1 (mod e)

    UnitCharacter() = default;
    UnitCharacter(u64 e, u64 s, u64 g) : modulus(e), order_s(s), gamma(g % e) {
        if (e == 0 || s == 0) throw domain_error("UnitCharacter: zero parameter");
        if (gcd_u64(gamma, e) != 1) throw domain_error("UnitCharacter: γ not a unit");
        if (powmod(gamma, s, e) != 1 % e) throw domain_error("UnitCharacter: γ^s != 1");
    }

    u64 value_on_power(u64 j) const { return powmod(gamma, j % order_s, modulus); }
    bool is_trivial() const { return gamma == 1 % modulus; }

    UnitCharacter inverse() const {
        return UnitCharacter(modulus, order_s, invmod(gamma, modulus));
    }
    UnitCharacter pow(u64 k) const {
        return UnitCharacter(modulus, order_s, powmod(gamma, k, modulus));
    }
    friend UnitCharacter operator*(const UnitCharacter& a, const UnitCharacter& b) {
        if (a.modulus != b.modulus || a.order_s != b.order_s)
            throw domain_error("UnitCharacter: mismatched character groups");
        return UnitCharacter(a.modulus, a.order_s, mulmod(a.gamma, b.gamma, a.modulus));
    }
    bool operator==(const UnitCharacter& o) const {
        return modulus == o.modulus && order_s == o.order_s && gamma == o.gamma;
    }

    // Restriction to the subgroup <h^m> of order s/m.
    UnitCharacter restrict_to_power(u64 m) const {
        if (order_s % m != 0) throw domain_error("UnitCharacter: m does not divide s");
        return UnitCharacter(modulus, order_s / m, powmod(gamma, m, modulus));
    }
};

/// The s characters of the cyclic group of order s into (Z/p^nZ)*, sorted by γ
/// ascending (so the trivial character comes first). Their images form the
/// unique cyclic subgroup of order s of (Z/p^nZ)*.
std::vector<UnitCharacter> enumerate_characters(const Modulus& mod, u64 s);

/// All characters Z/sZ -> (Z/eZ)* for arbitrary e ≥ 1, i.e. all units γ with
/// γ^s ≡ 1, sorted ascending. (The cyclic-subgroup uniqueness above holds only
/// for e = p^n with s | p-1.)
std::vector<UnitCharacter> characters_mod(u64 e, u64 s);

} // namespace ptower::alg
