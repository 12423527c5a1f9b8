#include "ptower/group_ring.hpp"

namespace ptower::alg {

GroupRingElem idempotent_for(const Modulus& mod, const UnitCharacter& chi) {
    u64 s = chi.order_s;
    if ((mod.p - 1) % s != 0) throw not_divisor_error("idempotent_for: s must divide p-1");
    u64 t = invmod(s % mod.value, mod.value);
    u64 ginv = invmod(chi.gamma, mod.value);
    std::vector<u64> c(s);
    u64 pw = 1;
    for (u64 j = 0; j < s; ++j) {
        c[j] = mulmod(t, pw, mod.value);
        pw = mulmod(pw, ginv, mod.value);
    }
    return GroupRingElem(mod, std::move(c));
}

std::vector<GroupRingElem> idempotents(const Modulus& mod, u64 s) {
    auto chars = enumerate_characters(mod, s);
    std::vector<GroupRingElem> out;
    out.reserve(s);
    for (const auto& chi : chars) out.push_back(idempotent_for(mod, chi));
    return out;
}

} // namespace ptower::alg
