#include "ptower/finite_group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace ptower::groups {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<std::uint8_t>> table)
    : name_(std::move(name)), n_(table.size()), table_(std::move(table)) {
    if (n_ == 0 || n_ > 96) throw too_large_error("FiniteGroup: order must be in [1, 96]");
    validate();
}

void FiniteGroup::validate() const {
    for (const auto& row : table_)
        if (row.size() != n_) throw invalid_instance_error("FiniteGroup: table not square");
    // Identity.
    u64 id = n_;
    for (u64 e = 0; e < n_; ++e) {
        bool ok = true;
        for (u64 a = 0; a < n_; ++a)
            if (table_[e][a] != a || table_[a][e] != a) ok = false;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id == n_) throw invalid_instance_error("FiniteGroup: no identity element");
    const_cast<FiniteGroup*>(this)->id_ = id;
    // Associativity.
    for (u64 a = 0; a < n_; ++a)
        for (u64 b = 0; b < n_; ++b)
            for (u64 c = 0; c < n_; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw invalid_instance_error("FiniteGroup: table not associative");
    // Inverses.
    auto& inv = const_cast<FiniteGroup*>(this)->inv_;
    inv.assign(n_, n_);
    for (u64 a = 0; a < n_; ++a) {
        for (u64 b = 0; b < n_; ++b)
            if (table_[a][b] == id_ && table_[b][a] == id_) inv[a] = b;
        if (inv[a] == n_) throw invalid_instance_error("FiniteGroup: missing inverse");
    }
}

u64 FiniteGroup::element_order(u64 a) const {
    u64 x = a, o = 1;
    while (x != id_) {
        x = mul(x, a);
        ++o;
    }
    return o;
}

bool FiniteGroup::is_abelian() const { return mask_abelian(full_mask()); }

Mask FiniteGroup::generated_by(const std::vector<u64>& gens) const {
    Mask m = trivial_mask();
    std::vector<u64> queue = {id_};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (u64 g : gens) {
            u64 x = mul(queue[qi], g);
            if (!(m >> x & 1)) {
                m |= Mask(1) << x;
                queue.push_back(x);
            }
        }
    }
    return m;
}

std::vector<u64> FiniteGroup::elements_of(Mask m) const {
    std::vector<u64> out;
    for (u64 i = 0; i < n_; ++i)
        if (m >> i & 1) out.push_back(i);
    return out;
}

bool FiniteGroup::is_subgroup(Mask m) const {
    if (!(m >> id_ & 1)) return false;
    auto elems = elements_of(m);
    for (u64 a : elems)
        for (u64 b : elems)
            if (!(m >> mul(a, b) & 1)) return false;
    return true;
}

bool FiniteGroup::is_normal(Mask m) const {
    auto elems = elements_of(m);
    for (u64 g = 0; g < n_; ++g)
        for (u64 x : elems)
            if (!(m >> conj(g, x) & 1)) return false;
    return true;
}

bool FiniteGroup::mask_abelian(Mask m) const {
    auto elems = elements_of(m);
    for (u64 a : elems)
        for (u64 b : elems)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

u64 FiniteGroup::mask_exponent(Mask m) const {
    u64 e = 1;
    for (u64 x : elements_of(m)) e = lcm_u64(e, element_order(x));
    return e;
}

std::vector<Mask> FiniteGroup::all_subgroups() const {
    std::set<Mask> found = {trivial_mask()};
    std::vector<Mask> queue = {trivial_mask()};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Mask h = queue[qi];
        auto base = elements_of(h);
        for (u64 g = 0; g < n_; ++g) {
            if (h >> g & 1) continue;
            auto gens = base;
            gens.push_back(g);
            Mask bigger = generated_by(gens);
            if (found.insert(bigger).second) queue.push_back(bigger);
        }
    }
    std::vector<Mask> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        return std::make_pair(mask_size(a), a) < std::make_pair(mask_size(b), b);
    });
    return out;
}

std::pair<FiniteGroup, std::vector<u64>> FiniteGroup::quotient(Mask normal_subgroup) const {
    if (!is_subgroup(normal_subgroup) || !is_normal(normal_subgroup))
        throw invalid_instance_error("quotient: subgroup is not normal");
    std::vector<u64> coset(n_, n_);
    std::vector<u64> reps;
    auto nelems = elements_of(normal_subgroup);
    for (u64 g = 0; g < n_; ++g) {
        if (coset[g] != n_) continue;
        u64 idx = reps.size();
        reps.push_back(g);
        for (u64 x : nelems) coset[mul(g, x)] = idx;
    }
    u64 q = reps.size();
    std::vector<std::vector<std::uint8_t>> t(q, std::vector<std::uint8_t>(q));
    for (u64 i = 0; i < q; ++i)
        for (u64 j = 0; j < q; ++j) t[i][j] = (std::uint8_t)coset[mul(reps[i], reps[j])];
    return {FiniteGroup(name_ + "/N", std::move(t)), coset};
}

std::pair<FiniteGroup, std::vector<u64>> FiniteGroup::subgroup_group(Mask m) const {
    if (!is_subgroup(m)) throw invalid_instance_error("subgroup_group: not a subgroup");
    auto elems = elements_of(m);
    std::vector<u64> index_of(n_, n_);
    for (std::size_t i = 0; i < elems.size(); ++i) index_of[elems[i]] = i;
    std::vector<std::vector<std::uint8_t>> t(elems.size(),
                                             std::vector<std::uint8_t>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            t[i][j] = (std::uint8_t)index_of[mul(elems[i], elems[j])];
    return {FiniteGroup(name_ + "<sub>", std::move(t)), elems};
}

std::vector<u64> FiniteGroup::generating_set() const {
    std::vector<u64> gens;
    Mask span = trivial_mask();
    // Prefer high-order elements to keep the set short.
    std::vector<u64> by_order(n_);
    for (u64 i = 0; i < n_; ++i) by_order[i] = i;
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](u64 a, u64 b) { return element_order(a) > element_order(b); });
    for (u64 g : by_order) {
        if (span >> g & 1) continue;
        gens.push_back(g);
        span = generated_by(gens);
        if (span == full_mask()) break;
    }
    return gens;
}

namespace {

// Extends a generator assignment to a full map via f(x·g) = f(x) ∘ v_g, then
// verifies multiplicativity on all pairs. Works for both additive (op = +)
// and multiplicative (op = *) targets.
template <typename Op>
bool extend_hom(const FiniteGroup& G, const std::vector<u64>& gens, const std::vector<u64>& vals,
                u64 unit, Op op, std::vector<u64>& out) {
    u64 n = G.order();
    const u64 UNSET = UINT64_MAX;
    out.assign(n, UNSET);
    out[G.identity()] = unit;
    std::vector<u64> queue = {G.identity()};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        u64 x = queue[qi];
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            u64 y = G.mul(x, gens[gi]);
            u64 v = op(out[x], vals[gi]);
            if (out[y] == UNSET) {
                out[y] = v;
                queue.push_back(y);
            } else if (out[y] != v) {
                return false;
            }
        }
    }
    for (u64 x = 0; x < n; ++x)
        for (u64 y = 0; y < n; ++y)
            if (out[G.mul(x, y)] != op(out[x], out[y])) return false;
    return true;
}

} // namespace

std::vector<std::vector<u64>> FiniteGroup::characters_into_units(u64 e) const {
    std::vector<u64> units;
    for (u64 u = 0; u < std::max<u64>(e, 2); ++u)
        if (e == 1 || gcd_u64(u % e, e) == 1) units.push_back(u % e);
    std::sort(units.begin(), units.end());
    units.erase(std::unique(units.begin(), units.end()), units.end());

    auto gens = generating_set();
    std::vector<std::vector<u64>> out;
    std::vector<u64> vals(gens.size(), 0);
    auto mulmod_e = [e](u64 a, u64 b) { return e == 1 ? 0 : mulmod(a, b, e); };
    std::vector<std::size_t> pick(gens.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < gens.size(); ++i) vals[i] = units[pick[i]];
        std::vector<u64> f;
        if (extend_hom(*this, gens, vals, 1 % e, mulmod_e, f)) {
            if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
        }
        std::size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == units.size()) pick[pos++] = 0;
        if (pos == pick.size()) break;
        if (gens.empty()) break;
    }
    if (gens.empty()) out.push_back(std::vector<u64>(n_, 1 % e));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<u64>> FiniteGroup::homs_to_cyclic(u64 e) const {
    auto gens = generating_set();
    std::vector<std::vector<u64>> out;
    auto addmod_e = [e](u64 a, u64 b) { return addmod(a, b, e); };
    if (gens.empty()) {
        out.push_back(std::vector<u64>(n_, 0));
        return out;
    }
    std::vector<u64> pick(gens.size(), 0);
    std::vector<u64> vals(gens.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < gens.size(); ++i) vals[i] = pick[i];
        std::vector<u64> f;
        if (extend_hom(*this, gens, vals, 0, addmod_e, f)) {
            if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
        }
        std::size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == e) pick[pos++] = 0;
        if (pos == pick.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

FiniteGroup FiniteGroup::cyclic(u64 n) {
    std::vector<std::vector<std::uint8_t>> t(n, std::vector<std::uint8_t>(n));
    for (u64 i = 0; i < n; ++i)
        for (u64 j = 0; j < n; ++j) t[i][j] = (std::uint8_t)((i + j) % n);
    return FiniteGroup("Z/" + std::to_string(n), std::move(t));
}

FiniteGroup FiniteGroup::dihedral(u64 n) {
    // Elements r^i (index i) and r^i s (index n + i); s r s^-1 = r^-1.
    u64 N = 2 * n;
    std::vector<std::vector<std::uint8_t>> t(N, std::vector<std::uint8_t>(N));
    auto enc = [n](u64 flip, u64 rot) { return (std::uint8_t)(flip * n + rot % n); };
    // r^r1 s^f1 · r^r2 s^f2 = r^(r1 + ε r2) s^(f1+f2) with ε = -1 iff f1 = 1.
    for (u64 f1 = 0; f1 < 2; ++f1)
        for (u64 r1 = 0; r1 < n; ++r1)
            for (u64 f2 = 0; f2 < 2; ++f2)
                for (u64 r2 = 0; r2 < n; ++r2) {
                    u64 rr = f1 == 0 ? (r1 + r2) % n : (r1 + n - r2 % n) % n;
                    t[enc(f1, r1)][enc(f2, r2)] = enc(f1 ^ f2, rr);
                }
    return FiniteGroup("D" + std::to_string(n), std::move(t));
}

namespace {
std::vector<std::array<std::uint8_t, 4>> perms_of(u64 k, bool even_only) {
    std::array<std::uint8_t, 4> base = {0, 1, 2, 3};
    std::vector<std::array<std::uint8_t, 4>> out;
    std::array<std::uint8_t, 4> p = base;
    std::sort(p.begin(), p.begin() + k);
    do {
        u64 inversions = 0;
        for (u64 i = 0; i < k; ++i)
            for (u64 j = i + 1; j < k; ++j)
                if (p[i] > p[j]) ++inversions;
        if (!even_only || inversions % 2 == 0) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + k));
    return out;
}

FiniteGroup perm_group(const std::string& name, u64 k, bool even_only) {
    auto perms = perms_of(k, even_only);
    u64 n = perms.size();
    auto index = [&](const std::array<std::uint8_t, 4>& q) {
        for (u64 i = 0; i < n; ++i)
            if (perms[i] == q) return i;
        throw check_failure("perm_group: composition not found");
    };
    std::vector<std::vector<std::uint8_t>> t(n, std::vector<std::uint8_t>(n));
    for (u64 i = 0; i < n; ++i)
        for (u64 j = 0; j < n; ++j) {
            std::array<std::uint8_t, 4> comp = {0, 1, 2, 3};
            for (u64 x = 0; x < k; ++x) comp[x] = perms[i][perms[j][x]];
            t[i][j] = (std::uint8_t)index(comp);
        }
    return FiniteGroup(name, std::move(t));
}
} // namespace

FiniteGroup FiniteGroup::symmetric(u64 k) {
    if (k < 1 || k > 4) throw too_large_error("symmetric: k must be in [1,4]");
    return perm_group("S" + std::to_string(k), k, false);
}

FiniteGroup FiniteGroup::alternating(u64 k) {
    if (k < 1 || k > 4) throw too_large_error("alternating: k must be in [1,4]");
    return perm_group("A" + std::to_string(k), k, true);
}

FiniteGroup FiniteGroup::heisenberg27() {
    // Upper unitriangular 3x3 matrices over F3, encoded by (a, b, c):
    // (a,b,c)·(a',b',c') = (a+a', b+b', c+c'+a·b').
    auto enc = [](u64 a, u64 b, u64 c) { return (std::uint8_t)(a * 9 + b * 3 + c); };
    std::vector<std::vector<std::uint8_t>> t(27, std::vector<std::uint8_t>(27));
    for (u64 a = 0; a < 3; ++a)
        for (u64 b = 0; b < 3; ++b)
            for (u64 c = 0; c < 3; ++c)
                for (u64 a2 = 0; a2 < 3; ++a2)
                    for (u64 b2 = 0; b2 < 3; ++b2)
                        for (u64 c2 = 0; c2 < 3; ++c2)
                            t[enc(a, b, c)][enc(a2, b2, c2)] =
                                enc((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3);
    return FiniteGroup("Heis27", std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    u64 n = a.order() * b.order();
    if (n > 96) throw too_large_error("direct_product: order exceeds 96");
    auto enc = [&](u64 x, u64 y) { return (std::uint8_t)(x * b.order() + y); };
    std::vector<std::vector<std::uint8_t>> t(n, std::vector<std::uint8_t>(n));
    for (u64 x1 = 0; x1 < a.order(); ++x1)
        for (u64 y1 = 0; y1 < b.order(); ++y1)
            for (u64 x2 = 0; x2 < a.order(); ++x2)
                for (u64 y2 = 0; y2 < b.order(); ++y2)
                    t[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
    return FiniteGroup(a.name() + "x" + b.name(), std::move(t));
}

std::vector<FiniteGroup> builtin_groups(u64 max_order) {
    std::vector<FiniteGroup> out;
    auto add = [&](FiniteGroup g) {
        if (g.order() <= max_order) out.push_back(std::move(g));
    };
    for (u64 n = 1; n <= max_order; ++n) add(FiniteGroup::cyclic(n));
    for (u64 n = 3; 2 * n <= max_order; ++n) add(FiniteGroup::dihedral(n));
    add(FiniteGroup::symmetric(3));
    add(FiniteGroup::symmetric(4));
    add(FiniteGroup::alternating(4));
    if (max_order >= 27) add(FiniteGroup::heisenberg27());
    // Abelian non-cyclic products.
    for (u64 a = 2; a <= max_order; ++a)
        for (u64 b = a; a * b <= max_order; ++b)
            if (gcd_u64(a, b) > 1)
                add(FiniteGroup::direct_product(FiniteGroup::cyclic(a), FiniteGroup::cyclic(b)));
    add(FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                    FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                                FiniteGroup::cyclic(2))));
    // A few mixed products.
    for (u64 a = 2; a * 6 <= max_order; ++a)
        add(FiniteGroup::direct_product(FiniteGroup::cyclic(a), FiniteGroup::symmetric(3)));
    std::vector<FiniteGroup> filtered;
    for (auto& g : out)
        if (g.order() <= max_order) filtered.push_back(std::move(g));
    return filtered;
}

} // namespace ptower::groups
