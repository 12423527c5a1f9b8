#include "ptower/characters.hpp"

#include <algorithm>

namespace ptower::alg {

std::vector<UnitCharacter> enumerate_characters(const Modulus& mod, u64 s) {
    if (s == 0 || (mod.p - 1) % s != 0)
        throw not_divisor_error("enumerate_characters: s must divide p-1");
    // (Z/p^nZ)* is cyclic of order (p-1)p^(n-1); the order-s subgroup is
    // generated by g^(φ/s) for a primitive root g.
    u64 g = primitive_root(mod);
    u64 gen = powmod(g, mod.unit_group_order() / s, mod.value);
    std::vector<u64> images;
    u64 x = 1;
    for (u64 i = 0; i < s; ++i) {
        images.push_back(x);
        x = mulmod(x, gen, mod.value);
    }
    require(x == 1, "enumerate_characters: generator order mismatch");
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    require(images.size() == s, "enumerate_characters: expected s distinct images");
    std::vector<UnitCharacter> out;
    out.reserve(s);
    for (u64 im : images) out.emplace_back(mod.value, s, im);
    return out;
}

std::vector<UnitCharacter> characters_mod(u64 e, u64 s) {
    std::vector<UnitCharacter> out;
    for (u64 g = 1; g < std::max<u64>(e, 2); ++g) {
        if (gcd_u64(g, e) != 1) continue;
        if (powmod(g, s, e) == 1 % e) out.emplace_back(e, s, g);
    }
    if (e == 1) out.emplace_back(1, s, 0);
    return out;
}

} // namespace ptower::alg
