#include "ptower/brute_cohomology.hpp"

#include <algorithm>
#include <functional>

namespace ptower::groups {

// ---------------------------------------------------------------------------
// PAdicRowSpace

PAdicRowSpace::PAdicRowSpace(u64 p, u64 K, std::size_t width)
    : p_(p), K_(K), mod_(checked_pow(p, K)), width_(width) {}

void PAdicRowSpace::reduce_in_place(Vec& row) const {
    for (std::size_t col = 0; col < width_; ++col) {
        if (row[col] == 0) continue;
        auto it = pivots_.find(col);
        if (it == pivots_.end()) continue;
        u64 pv = p_valuation(it->second[col], p_);
        u64 rv = p_valuation(row[col], p_);
        if (rv < pv) continue; // cannot eliminate; row keeps a unit-smaller entry
        u64 mult = row[col] / checked_pow(p_, pv); // pivot entry is exactly p^pv
        for (std::size_t j = col; j < width_; ++j)
            row[j] = submod(row[j], mulmod(mult, it->second[j], mod_), mod_);
    }
}

void PAdicRowSpace::insert(Vec row) {
    std::vector<Vec> pending;
    pending.push_back(std::move(row));
    while (!pending.empty()) {
        Vec cur = std::move(pending.back());
        pending.pop_back();
        for (auto& x : cur) x %= mod_;
        std::size_t col = 0;
        while (col < width_) {
            if (cur[col] == 0) {
                ++col;
                continue;
            }
            auto it = pivots_.find(col);
            if (it == pivots_.end()) {
                // Normalize so the leading entry is exactly p^v, install, and
                // queue the saturation row p^(K-v)·cur.
                u64 v = p_valuation(cur[col], p_);
                u64 unit = cur[col] / checked_pow(p_, v);
                u64 uinv = invmod(unit, mod_);
                for (std::size_t j = col; j < width_; ++j) cur[j] = mulmod(cur[j], uinv, mod_);
                Vec sat(width_, 0);
                u64 mult = checked_pow(p_, K_ - v);
                bool nonzero = false;
                for (std::size_t j = col; j < width_; ++j) {
                    sat[j] = mulmod(cur[j], mult, mod_);
                    if (sat[j]) nonzero = true;
                }
                pivots_[col] = std::move(cur);
                if (nonzero) pending.push_back(std::move(sat));
                break;
            }
            u64 pv = p_valuation(it->second[col], p_);
            u64 rv = p_valuation(cur[col], p_);
            if (rv >= pv) {
                u64 mult = cur[col] / checked_pow(p_, pv);
                for (std::size_t j = col; j < width_; ++j)
                    cur[j] = submod(cur[j], mulmod(mult, it->second[j], mod_), mod_);
                // entry at col is now 0; move on
            } else {
                // New row has the smaller valuation: swap it in, re-insert the
                // old pivot row.
                Vec old = it->second;
                u64 unit = cur[col] / checked_pow(p_, rv);
                u64 uinv = invmod(unit, mod_);
                for (std::size_t j = col; j < width_; ++j) cur[j] = mulmod(cur[j], uinv, mod_);
                Vec sat(width_, 0);
                u64 mult = checked_pow(p_, K_ - rv);
                bool nonzero = false;
                for (std::size_t j = col; j < width_; ++j) {
                    sat[j] = mulmod(cur[j], mult, mod_);
                    if (sat[j]) nonzero = true;
                }
                it->second = std::move(cur);
                pending.push_back(std::move(old));
                if (nonzero) pending.push_back(std::move(sat));
                break;
            }
        }
    }
}

bool PAdicRowSpace::reduces_to_zero(Vec row) const {
    for (auto& x : row) x %= mod_;
    reduce_in_place(row);
    for (u64 x : row)
        if (x) return false;
    return true;
}

u64 PAdicRowSpace::log_size() const {
    u64 s = 0;
    for (const auto& [col, row] : pivots_) s += K_ - p_valuation(row[col], p_);
    return s;
}

// ---------------------------------------------------------------------------
// GModule

GModule::GModule(FiniteGroup G, u64 p, std::vector<u64> exps,
                 std::vector<std::vector<Vec>> action)
    : G_(std::move(G)), p_(p), exps_(std::move(exps)), action_(std::move(action)) {
    if (!is_prime(p_)) throw domain_error("GModule: p must be prime");
    if (exps_.empty()) throw domain_error("GModule: empty carrier");
    K_ = *std::max_element(exps_.begin(), exps_.end());
    for (u64 e : exps_) {
        part_mods_.push_back(checked_pow(p_, e));
        strides_.push_back(order_);
        order_ *= part_mods_.back();
        log_order_ += e;
        if (order_ > (1u << 22)) throw too_large_error("GModule: carrier too large");
    }
    if (action_.size() != G_.order()) throw domain_error("GModule: need one matrix per element");
    // ρ must be a homomorphism into endomorphisms (spot-checked on a slice of
    // the carrier; the builders guarantee it globally).
    for (u64 key = 0; key < std::min<u64>(order_, 64); ++key) {
        Vec v = decode(key);
        if (apply(G_.identity(), v) != v)
            throw domain_error("GModule: identity does not act trivially");
    }
    for (u64 g = 0; g < G_.order(); ++g)
        for (u64 h = 0; h < G_.order(); ++h) {
            u64 gh = G_.mul(g, h);
            for (u64 key = 0; key < std::min<u64>(order_, 64); ++key) {
                Vec v = decode(key);
                if (apply(gh, v) != apply(g, apply(h, v)))
                    throw domain_error("GModule: action is not multiplicative");
            }
        }
}

GModule GModule::trivial(const FiniteGroup& G, u64 p, std::vector<u64> exps) {
    std::size_t c = exps.size();
    std::vector<Vec> id(c, Vec(c, 0));
    for (std::size_t i = 0; i < c; ++i) id[i][i] = 1;
    return GModule(G, p, std::move(exps), std::vector<std::vector<Vec>>(G.order(), id));
}

GModule GModule::from_generators(const FiniteGroup& G, u64 p, std::vector<u64> exps,
                                 const std::vector<u64>& gens,
                                 const std::vector<std::vector<Vec>>& gen_mats) {
    std::size_t c = exps.size();
    std::vector<Vec> id(c, Vec(c, 0));
    for (std::size_t i = 0; i < c; ++i) id[i][i] = 1;
    std::vector<u64> mods;
    for (u64 e : exps) mods.push_back(checked_pow(p, e));
    auto matmul = [&](const std::vector<Vec>& a, const std::vector<Vec>& b) {
        std::vector<Vec> r(c, Vec(c, 0));
        for (std::size_t i = 0; i < c; ++i)
            for (std::size_t k = 0; k < c; ++k) {
                if (a[i][k] == 0) continue;
                for (std::size_t j = 0; j < c; ++j)
                    r[i][j] = addmod(r[i][j], mulmod(a[i][k] % mods[i], b[k][j] % mods[i], mods[i]),
                                     mods[i]);
            }
        return r;
    };
    std::vector<std::vector<Vec>> act(G.order());
    std::vector<bool> have(G.order(), false);
    act[G.identity()] = id;
    have[G.identity()] = true;
    std::vector<u64> queue = {G.identity()};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        u64 x = queue[qi];
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            u64 y = G.mul(x, gens[gi]);
            auto m = matmul(act[x], gen_mats[gi]); // ρ(x·g) = ρ(x)ρ(g)
            if (!have[y]) {
                act[y] = std::move(m);
                have[y] = true;
                queue.push_back(y);
            } else if (act[y] != m) {
                throw domain_error("GModule: generator matrices are inconsistent");
            }
        }
    }
    for (bool h : have)
        if (!h) throw domain_error("GModule: generators do not generate the group");
    return GModule(G, p, std::move(exps), std::move(act));
}

GModule GModule::scalar_action(const FiniteGroup& G, u64 p, u64 k,
                               const std::vector<u64>& scalar_per_element) {
    std::vector<std::vector<Vec>> act(G.order());
    for (u64 g = 0; g < G.order(); ++g) act[g] = {{scalar_per_element[g]}};
    return GModule(G, p, {k}, std::move(act));
}

Vec GModule::add(const Vec& a, const Vec& b) const {
    Vec r(comps());
    for (std::size_t i = 0; i < comps(); ++i) r[i] = addmod(a[i], b[i], part_mods_[i]);
    return r;
}

Vec GModule::sub(const Vec& a, const Vec& b) const {
    Vec r(comps());
    for (std::size_t i = 0; i < comps(); ++i) r[i] = submod(a[i], b[i], part_mods_[i]);
    return r;
}

Vec GModule::scalar_mul(u64 c, const Vec& a) const {
    Vec r(comps());
    for (std::size_t i = 0; i < comps(); ++i) r[i] = mulmod(c % part_mods_[i], a[i], part_mods_[i]);
    return r;
}

Vec GModule::apply(u64 g, const Vec& a) const {
    const auto& m = action_[g];
    Vec r(comps(), 0);
    for (std::size_t i = 0; i < comps(); ++i)
        for (std::size_t j = 0; j < comps(); ++j)
            r[i] = addmod(r[i], mulmod(m[i][j] % part_mods_[i], a[j], part_mods_[i]),
                          part_mods_[i]);
    return r;
}

u64 GModule::encode(const Vec& a) const {
    u64 k = 0;
    for (std::size_t i = 0; i < comps(); ++i) k += a[i] * strides_[i];
    return k;
}

Vec GModule::decode(u64 key) const {
    Vec a(comps());
    for (std::size_t i = 0; i < comps(); ++i) {
        a[i] = key % part_mods_[i];
        key /= part_mods_[i];
    }
    return a;
}

GModule GModule::twist(const std::vector<u64>& chi_values) const {
    auto act = action_;
    for (u64 g = 0; g < G_.order(); ++g)
        for (auto& row : act[g])
            for (auto& x : row) x = mulmod(x, chi_values[g], checked_pow(p_, K_));
    return GModule(G_, p_, exps_, std::move(act));
}

std::pair<GModule, std::vector<u64>> GModule::restrict_to(Mask subgroup) const {
    auto [K, elems] = G_.subgroup_group(subgroup);
    std::vector<std::vector<Vec>> act;
    act.reserve(elems.size());
    for (u64 e : elems) act.push_back(action_[e]);
    return {GModule(K, p_, exps_, std::move(act)), elems};
}

// ---------------------------------------------------------------------------
// H¹ by direct enumeration of crossed homomorphisms

std::vector<u64> H1Data::key_of(const GModule& M, const std::vector<Vec>& f) const {
    std::vector<u64> k;
    k.reserve(f.size());
    for (const auto& v : f) k.push_back(M.encode(v));
    return k;
}

H1Data brute_h1(const GModule& M) {
    const auto& G = M.group();
    auto gens = G.generating_set();
    u128 cands = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        cands *= M.order();
        if (cands > (1u << 22)) throw too_large_error("brute_h1: too many candidates");
    }

    H1Data out;
    // Candidate values on generators, extended via f(x·g) = f(x) + x·f(g) and
    // then verified on every pair.
    std::vector<u64> pick(gens.size(), 0);
    while (true) {
        std::vector<Vec> f(G.order());
        std::vector<bool> have(G.order(), false);
        f[G.identity()] = M.zero();
        have[G.identity()] = true;
        std::vector<u64> queue = {G.identity()};
        bool ok = true;
        for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
            u64 x = queue[qi];
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                u64 y = G.mul(x, gens[gi]);
                Vec val = M.add(f[x], M.apply(x, M.decode(pick[gi])));
                if (!have[y]) {
                    f[y] = val;
                    have[y] = true;
                    queue.push_back(y);
                } else if (f[y] != val) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            for (u64 x = 0; x < G.order() && ok; ++x)
                for (u64 y = 0; y < G.order() && ok; ++y)
                    if (f[G.mul(x, y)] != M.add(f[x], M.apply(x, f[y]))) ok = false;
        }
        if (ok) out.cocycles.push_back(std::move(f));

        std::size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == M.order()) pick[pos++] = 0;
        if (pick.empty() || pos == pick.size()) break;
    }

    for (u64 key = 0; key < M.order(); ++key) {
        Vec a = M.decode(key);
        std::vector<Vec> f(G.order());
        for (u64 g = 0; g < G.order(); ++g) f[g] = M.sub(M.apply(g, a), a);
        out.coboundary_keys.insert(out.key_of(M, f));
    }

    u64 z1 = out.cocycles.size(), b1 = out.coboundary_keys.size();
    require(z1 % b1 == 0, "brute_h1: |B1| does not divide |Z1|");
    out.summary.order = z1 / b1;
    out.summary.log_order = p_valuation(out.summary.order, M.p());
    require(checked_pow(M.p(), out.summary.log_order) == out.summary.order,
            "brute_h1: order is not a p-power");

    // Invariant factors by torsion counting in Z1/B1.
    std::vector<u64> counts = {b1};
    for (u64 j = 1; j <= M.max_exp(); ++j) {
        u64 pj = checked_pow(M.p(), j);
        u64 c = 0;
        for (const auto& f : out.cocycles) {
            std::vector<Vec> pf(G.order());
            for (u64 g = 0; g < G.order(); ++g) pf[g] = M.scalar_mul(pj, f[g]);
            if (out.coboundary_keys.count(out.key_of(M, pf))) ++c;
        }
        counts.push_back(c);
        if (c == z1) break;
    }
    std::vector<u64> depth;
    for (std::size_t j = 1; j < counts.size(); ++j)
        depth.push_back(p_valuation(counts[j] / counts[j - 1], M.p()));
    for (std::size_t j = 0; j < depth.size(); ++j) {
        u64 here = depth[j] - (j + 1 < depth.size() ? depth[j + 1] : 0);
        for (u64 t = 0; t < here; ++t)
            out.summary.invariant_factors.push_back(checked_pow(M.p(), j + 1));
    }
    std::sort(out.summary.invariant_factors.rbegin(), out.summary.invariant_factors.rend());
    return out;
}

// ---------------------------------------------------------------------------
// H² by linear algebra over Z/p^K

namespace {

// Sparse accumulation of one equation row, lifted to modulus p^K by scaling
// with p^(K - k_target).
struct RowBuilder {
    const GModule& M;
    std::size_t nvars;
    std::map<std::size_t, u64> entries;
    u64 scale;
    u64 mod;

    RowBuilder(const GModule& M_, std::size_t nvars_, std::size_t target_comp)
        : M(M_), nvars(nvars_) {
        mod = checked_pow(M.p(), M.max_exp());
        scale = mod / M.part_mods()[target_comp];
    }
    void addc(std::size_t var, u64 coeff) {
        u64 c = mulmod(coeff % mod, scale, mod);
        if (c == 0) return;
        u64& slot = entries[var];
        slot = addmod(slot, c, mod);
        if (slot == 0) entries.erase(var);
    }
    Vec dense() const {
        Vec r(nvars, 0);
        for (auto [v, c] : entries) r[v] = c;
        return r;
    }
};

// Variable layouts: C¹ has one block per group element; C² one per pair.
struct Complex {
    const GModule& M;
    u64 n;
    std::size_t comps;
    explicit Complex(const GModule& M_) : M(M_), n(M.group().order()), comps(M.comps()) {}

    std::size_t c1_dim() const { return n * comps; }
    std::size_t c2_dim() const { return n * n * comps; }
    std::size_t v1(u64 g, std::size_t c) const { return g * comps + c; }
    std::size_t v2(u64 g, u64 h, std::size_t c) const { return (g * n + h) * comps + c; }

    u64 log_c1() const { return n * M.log_order(); }
    u64 log_c2() const { return n * n * M.log_order(); }

    // (d¹f)(g,h) = g·f(h) - f(gh) + f(g), one row per (g,h,comp).
    void d1_rows(const std::function<void(Vec)>& sink) const {
        const auto& G = M.group();
        for (u64 g = 0; g < n; ++g)
            for (u64 h = 0; h < n; ++h)
                for (std::size_t c = 0; c < comps; ++c) {
                    RowBuilder row(M, c1_dim(), c);
                    const auto& mat = M.action_of(g);
                    for (std::size_t j = 0; j < comps; ++j) row.addc(v1(h, j), mat[c][j]);
                    row.addc(v1(G.mul(g, h), c), M.part_mods()[c] - 1);
                    row.addc(v1(g, c), 1);
                    sink(row.dense());
                }
    }

    // (d²f)(g,h,l) = g·f(h,l) - f(gh,l) + f(g,hl) - f(g,h).
    void d2_rows(const std::function<void(Vec)>& sink) const {
        const auto& G = M.group();
        for (u64 g = 0; g < n; ++g)
            for (u64 h = 0; h < n; ++h)
                for (u64 l = 0; l < n; ++l)
                    for (std::size_t c = 0; c < comps; ++c) {
                        RowBuilder row(M, c2_dim(), c);
                        const auto& mat = M.action_of(g);
                        for (std::size_t j = 0; j < comps; ++j) row.addc(v2(h, l, j), mat[c][j]);
                        u64 minus1 = M.part_mods()[c] - 1;
                        row.addc(v2(G.mul(g, h), l, c), minus1);
                        row.addc(v2(g, G.mul(h, l), c), 1);
                        row.addc(v2(g, h, c), minus1);
                        sink(row.dense());
                    }
    }
};

} // namespace

BruteCohomology brute_h2(const GModule& M) {
    Complex cx(M);
    if (cx.c2_dim() > 2500) throw too_large_error("brute_h2: cochain space too large");
    u64 p = M.p(), K = M.max_exp();

    PAdicRowSpace im_d1(p, K, cx.c1_dim());
    cx.d1_rows([&](Vec r) { im_d1.insert(std::move(r)); });
    u64 log_im_d1 = im_d1.log_size(); // = log |B²|

    PAdicRowSpace im_d2(p, K, cx.c2_dim());
    cx.d2_rows([&](Vec r) { im_d2.insert(std::move(r)); });
    u64 log_z2 = cx.log_c2() - im_d2.log_size();

    require(log_z2 >= log_im_d1, "brute_h2: B2 larger than Z2");
    BruteCohomology out;
    out.log_order = log_z2 - log_im_d1;
    if (out.log_order > 40) throw too_large_error("brute_h2: cohomology order overflow");
    out.order = checked_pow(p, out.log_order);
    if (out.log_order == 0) return out;
    if (out.log_order == 1) {
        out.invariant_factors = {p};
        return out;
    }

    // Invariant factors from p^j-torsion of Z²/B²: |{z : p^j z ∈ B²}| equals
    // |ker ψ_j| / |ker d¹| for ψ_j(z, c) = (d²z, p^j z - d¹c), which reduces
    // to log t_j = log|C²| - log|im ψ_j|. The d² block is shared across j.
    std::size_t width = cx.c2_dim() + cx.c1_dim();
    PAdicRowSpace psi_base(p, K, width);
    cx.d2_rows([&](Vec r) {
        r.resize(width, 0);
        psi_base.insert(std::move(r));
    });
    std::vector<u64> log_t = {0};
    for (u64 j = 1; j <= K; ++j) {
        PAdicRowSpace im_psi = psi_base;
        u64 pj = checked_pow(p, j);
        for (u64 g = 0; g < cx.n; ++g)
            for (u64 h = 0; h < cx.n; ++h)
                for (std::size_t c = 0; c < cx.comps; ++c) {
                    // row: p^j z(g,h,c) - (d¹c)(g,h,c), lifted by the target scale
                    RowBuilder zpart(M, width, c);
                    zpart.addc(cx.v2(g, h, c), pj);
                    const auto& mat = M.action_of(g);
                    u64 off = cx.c2_dim();
                    RowBuilder cpart(M, cx.c1_dim(), c);
                    for (std::size_t jj = 0; jj < cx.comps; ++jj)
                        cpart.addc(cx.v1(h, jj), M.part_mods()[c] - mat[c][jj] % M.part_mods()[c]);
                    cpart.addc(cx.v1(M.group().mul(g, h), c), 1);
                    cpart.addc(cx.v1(g, c), M.part_mods()[c] - 1);
                    Vec row = zpart.dense();
                    Vec crow = cpart.dense();
                    for (std::size_t t = 0; t < cx.c1_dim(); ++t) row[off + t] = crow[t];
                    im_psi.insert(std::move(row));
                }
        u64 log_tj = cx.log_c2() - im_psi.log_size();
        require(log_tj >= (log_t.empty() ? 0 : log_t.back()), "brute_h2: torsion not monotone");
        log_t.push_back(log_tj);
        if (log_tj == out.log_order) break;
    }
    require(log_t.back() == out.log_order, "brute_h2: torsion profile does not reach H2");

    std::vector<u64> depth;
    for (std::size_t j = 1; j < log_t.size(); ++j) depth.push_back(log_t[j] - log_t[j - 1]);
    for (std::size_t j = 0; j < depth.size(); ++j) {
        u64 here = depth[j] - (j + 1 < depth.size() ? depth[j + 1] : 0);
        for (u64 t = 0; t < here; ++t) out.invariant_factors.push_back(checked_pow(p, j + 1));
    }
    std::sort(out.invariant_factors.rbegin(), out.invariant_factors.rend());
    return out;
}

BruteCohomology brute_cohomology(const GModule& M, int degree) {
    if (degree == 1) return brute_h1(M).summary;
    if (degree == 2) return brute_h2(M);
    throw domain_error("brute_cohomology: degree must be 1 or 2");
}

// ---------------------------------------------------------------------------
// H2Classes

H2Classes::H2Classes(const GModule& M)
    : M_(M), coboundary_space_(M.p(), M.max_exp(), Complex(M).c2_dim()) {
    Complex cx(M_);
    // Column space of d¹ (image of the basis cochains) gives coboundary
    // membership.
    for (u64 g = 0; g < cx.n; ++g)
        for (std::size_t c = 0; c < cx.comps; ++c) {
            // basis cochain: f(g) = e_c, so the coboundary table is
            // t(x,y) = x·f(y) - f(xy) + f(x) evaluated at f = δ_{g,c}.
            Table t(cx.n, std::vector<Vec>(cx.n, M_.zero()));
            for (u64 x = 0; x < cx.n; ++x)
                for (u64 y = 0; y < cx.n; ++y) {
                    Vec val = M_.zero();
                    if (y == g) {
                        Vec e = M_.zero();
                        e[c] = 1;
                        val = M_.add(val, M_.apply(x, e));
                    }
                    if (M_.group().mul(x, y) == g) {
                        Vec e = M_.zero();
                        e[c] = 1;
                        val = M_.sub(val, e);
                    }
                    if (x == g) {
                        Vec e = M_.zero();
                        e[c] = 1;
                        val = M_.add(val, e);
                    }
                    t[x][y] = val;
                }
            coboundary_space_.insert(table_lift(t));
        }

    // Class representatives for a cyclic acting group: f_a(g^i, g^j) =
    // [i + j >= N]·a for a in the fixed submodule.
    const auto& G = M_.group();
    u64 gen = G.order();
    for (u64 g = 0; g < G.order(); ++g)
        if (G.element_order(g) == G.order()) {
            gen = g;
            break;
        }
    if (gen == G.order()) return; // non-cyclic: no representative construction
    u64 N = G.order();
    std::vector<u64> power_index(N); // element -> exponent i with g^i
    u64 x = G.identity();
    for (u64 i = 0; i < N; ++i) {
        power_index[x] = i;
        x = G.mul(x, gen);
    }
    auto h2 = brute_h2(M_);
    for (u64 key = 0; key < M_.order(); ++key) {
        Vec a = M_.decode(key);
        bool fixed = true;
        for (u64 g = 0; g < N && fixed; ++g)
            if (M_.apply(g, a) != a) fixed = false;
        if (!fixed) continue;
        Table t(N, std::vector<Vec>(N, M_.zero()));
        for (u64 i = 0; i < N; ++i)
            for (u64 j = 0; j < N; ++j) {
                Vec val = (power_index[i] + power_index[j] >= N) ? a : M_.zero();
                t[i][j] = val;
            }
        require(is_cocycle(t), "H2Classes: representative fails the cocycle identity");
        bool fresh = true;
        for (const auto& r : reps_)
            if (cohomologous(r, t)) {
                fresh = false;
                break;
            }
        if (fresh) reps_.push_back(std::move(t));
        if (reps_.size() == h2.order) break;
    }
    require(reps_.size() == h2.order, "H2Classes: representatives do not exhaust H2");
}

Vec H2Classes::table_lift(const Table& t) const {
    Complex cx(M_);
    u64 mod = checked_pow(M_.p(), M_.max_exp());
    Vec r(cx.c2_dim(), 0);
    for (u64 g = 0; g < cx.n; ++g)
        for (u64 h = 0; h < cx.n; ++h)
            for (std::size_t c = 0; c < cx.comps; ++c)
                r[cx.v2(g, h, c)] = mulmod(t[g][h][c], mod / M_.part_mods()[c], mod);
    return r;
}

bool H2Classes::is_cocycle(const Table& t) const {
    const auto& G = M_.group();
    for (u64 g = 0; g < G.order(); ++g)
        for (u64 h = 0; h < G.order(); ++h)
            for (u64 l = 0; l < G.order(); ++l) {
                Vec lhs = M_.add(M_.apply(g, t[h][l]), t[g][G.mul(h, l)]);
                Vec rhs = M_.add(t[G.mul(g, h)][l], t[g][h]);
                if (lhs != rhs) return false;
            }
    return true;
}

bool H2Classes::is_coboundary(const Table& t) const {
    return coboundary_space_.reduces_to_zero(table_lift(t));
}

bool H2Classes::cohomologous(const Table& a, const Table& b) const {
    Table d(a.size(), std::vector<Vec>(a.size(), M_.zero()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) d[i][j] = M_.sub(a[i][j], b[i][j]);
    return is_coboundary(d);
}

H2Classes::Table H2Classes::transform(const Table& t, const std::vector<Vec>& sigma_mat,
                                      const std::vector<u64>& conj_perm) const {
    u64 n = M_.group().order();
    Table r(n, std::vector<Vec>(n, M_.zero()));
    for (u64 g = 0; g < n; ++g)
        for (u64 h = 0; h < n; ++h) {
            const Vec& src = t[conj_perm[g]][conj_perm[h]];
            Vec val = M_.zero();
            for (std::size_t i = 0; i < M_.comps(); ++i)
                for (std::size_t j = 0; j < M_.comps(); ++j)
                    val[i] = addmod(val[i],
                                    mulmod(sigma_mat[i][j] % M_.part_mods()[i], src[j],
                                           M_.part_mods()[i]),
                                    M_.part_mods()[i]);
            r[g][h] = val;
        }
    return r;
}

std::size_t H2Classes::class_index_of(const Table& t) const {
    for (std::size_t i = 0; i < reps_.size(); ++i)
        if (cohomologous(reps_[i], t)) return i;
    throw check_failure("H2Classes: table not matched to any class");
}

} // namespace ptower::groups
