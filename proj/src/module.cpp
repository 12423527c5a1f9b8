#include "ptower/module.hpp"

#include <algorithm>
#include <unordered_set>

namespace ptower::alg {

namespace {
constexpr u64 kMaxEnumerable = 1u << 22; // hard cap on carrier enumeration
}

CyclicActionModule::CyclicActionModule(Modulus mod, std::vector<u64> parts, Mat action,
                                       u64 acting_order)
    : mod_(mod), parts_(std::move(parts)), action_(std::move(action)), acting_order_(acting_order) {
    if (parts_.empty()) throw domain_error("module: needs at least one component");
    if (acting_order_ == 0) throw domain_error("module: acting order must be positive");
    part_mods_.resize(parts_.size());
    strides_.resize(parts_.size());
    u128 total = 1;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] > mod_.n)
            throw domain_error("module: component exponent out of range [0, n]");
        part_mods_[i] = checked_pow(mod_.p, parts_[i]);
        strides_[i] = (u64)total;
        total *= part_mods_[i];
        if (total > kMaxEnumerable) throw too_large_error("module: carrier too large to enumerate");
    }
    order_ = (u64)total;
    canonicalize(action_);
    validate();
}

CyclicActionModule CyclicActionModule::cyclic(Modulus mod, u64 k, u64 mult, u64 acting_order) {
    Mat m;
    m.rows = {{mult}};
    return CyclicActionModule(mod, {k}, m, acting_order);
}

CyclicActionModule CyclicActionModule::diagonal(Modulus mod, std::vector<u64> parts, Vec mults,
                                                u64 acting_order) {
    Mat m;
    m.rows.assign(parts.size(), Vec(parts.size(), 0));
    for (std::size_t i = 0; i < parts.size(); ++i) m.rows[i][i] = mults[i];
    return CyclicActionModule(mod, std::move(parts), m, acting_order);
}

void CyclicActionModule::validate() const {
    if (action_.dim() != parts_.size()) throw domain_error("module: action dimension mismatch");
    // Matrix entries must define a homomorphism: p^{k_i - k_j} | entry(i,j)
    // whenever k_i > k_j.
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            if (parts_[i] > parts_[j]) {
                u64 need = checked_pow(mod_.p, parts_[i] - parts_[j]);
                if (action_.rows[i][j] % need != 0)
                    throw domain_error("module: action entry does not respect component orders");
            }
    if (!mat_equal(mat_pow(action_, acting_order_), Mat::identity(rank())))
        throw domain_error("module: action order does not divide acting_order");
}

u64 CyclicActionModule::exponent() const {
    u64 k = *std::max_element(parts_.begin(), parts_.end());
    return checked_pow(mod_.p, k);
}

Vec CyclicActionModule::add(const Vec& a, const Vec& b) const {
    Vec r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = addmod(a[i], b[i], part_mods_[i]);
    return r;
}

Vec CyclicActionModule::negate(const Vec& a) const {
    Vec r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = submod(0, a[i], part_mods_[i]);
    return r;
}

Vec CyclicActionModule::scalar_mul(u64 c, const Vec& a) const {
    Vec r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = mulmod(c % part_mods_[i], a[i], part_mods_[i]);
    return r;
}

Vec CyclicActionModule::apply(const Mat& m, const Vec& a) const {
    Vec r(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i) {
        u64 acc = 0;
        for (std::size_t j = 0; j < rank(); ++j)
            acc = addmod(acc, mulmod(m.rows[i][j] % part_mods_[i], a[j], part_mods_[i]),
                         part_mods_[i]);
        r[i] = acc;
    }
    return r;
}

u64 CyclicActionModule::encode(const Vec& a) const {
    u64 k = 0;
    for (std::size_t i = 0; i < rank(); ++i) k += a[i] * strides_[i];
    return k;
}

Vec CyclicActionModule::decode(u64 key) const {
    Vec a(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        a[i] = key % part_mods_[i];
        key /= part_mods_[i];
    }
    return a;
}

void CyclicActionModule::canonicalize(Mat& m) const {
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) m.rows[i][j] %= part_mods_[i];
}

Mat CyclicActionModule::mat_mul(const Mat& a, const Mat& b) const {
    std::size_t n = rank();
    Mat r;
    r.rows.assign(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a.rows[i][k] == 0) continue;
            u64 aik = a.rows[i][k] % part_mods_[i];
            for (std::size_t j = 0; j < n; ++j)
                r.rows[i][j] =
                    addmod(r.rows[i][j], mulmod(aik, b.rows[k][j] % part_mods_[i], part_mods_[i]),
                           part_mods_[i]);
        }
    return r;
}

Mat CyclicActionModule::mat_add(const Mat& a, const Mat& b) const {
    Mat r = a;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            r.rows[i][j] = addmod(a.rows[i][j], b.rows[i][j], part_mods_[i]);
    return r;
}

Mat CyclicActionModule::mat_scaled(const Mat& a, u64 c) const {
    Mat r = a;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            r.rows[i][j] = mulmod(a.rows[i][j], c % part_mods_[i], part_mods_[i]);
    return r;
}

Mat CyclicActionModule::mat_pow(const Mat& a, u64 e) const {
    Mat r = Mat::identity(rank());
    Mat base = a;
    while (e) {
        if (e & 1) r = mat_mul(r, base);
        base = mat_mul(base, base);
        e >>= 1;
    }
    return r;
}

bool CyclicActionModule::mat_equal(const Mat& a, const Mat& b) const {
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            if (a.rows[i][j] % part_mods_[i] != b.rows[i][j] % part_mods_[i]) return false;
    return true;
}

Mat CyclicActionModule::group_ring_matrix(const std::vector<u64>& coeffs) const {
    Mat acc;
    acc.rows.assign(rank(), Vec(rank(), 0));
    Mat pw = Mat::identity(rank());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        acc = mat_add(acc, mat_scaled(pw, coeffs[j]));
        if (j + 1 < coeffs.size()) pw = mat_mul(pw, action_);
    }
    return acc;
}

CyclicActionModule CyclicActionModule::twist(const UnitCharacter& chi) const {
    if (acting_order_ % chi.order_s != 0)
        throw domain_error("twist: character order does not divide acting order");
    return CyclicActionModule(mod_, parts_, mat_scaled(action_, chi.gamma), acting_order_);
}

bool CyclicActionModule::Submodule::contains_key(u64 k) const {
    return std::binary_search(elem_keys.begin(), elem_keys.end(), k);
}

std::vector<u64> CyclicActionModule::closure(std::vector<u64> seed_keys) const {
    // Incremental span: add each seed not yet spanned as a generator, then
    // saturate by all its multiples. Cost is |span| per generator, not
    // |span|^2.
    std::unordered_set<u64> span = {0};
    std::vector<u64> span_vec = {0};
    for (u64 k : seed_keys) {
        if (span.count(k)) continue;
        Vec g = decode(k);
        std::vector<Vec> multiples;
        Vec cur = g;
        while (encode(cur) != 0) {
            multiples.push_back(cur);
            cur = add(cur, g);
        }
        std::vector<u64> base = span_vec;
        for (const auto& m : multiples)
            for (u64 sk : base) {
                u64 nk = encode(add(decode(sk), m));
                if (span.insert(nk).second) span_vec.push_back(nk);
            }
    }
    std::sort(span_vec.begin(), span_vec.end());
    return span_vec;
}

std::vector<u64> CyclicActionModule::invariant_factors_of_set(const std::vector<u64>& keys) const {
    // Count p^j-torsion; the number of cyclic factors of order ≥ p^j is
    // log_p t_j - log_p t_{j-1}.
    std::vector<u64> counts; // counts[j] = |{x : p^j x = 0}|
    counts.push_back(1);
    for (u64 j = 1; j <= mod_.n; ++j) {
        u64 pj = checked_pow(mod_.p, j);
        u64 c = 0;
        for (u64 k : keys) {
            Vec v = decode(k);
            if (encode(scalar_mul(pj, v)) == 0) ++c;
        }
        counts.push_back(c);
        if (c == keys.size()) break;
    }
    std::vector<u64> depth; // depth[j] = #factors of order ≥ p^(j+1)
    for (std::size_t j = 1; j < counts.size(); ++j) {
        u64 ratio = counts[j] / counts[j - 1];
        depth.push_back(p_valuation(ratio, mod_.p));
    }
    std::vector<u64> factors;
    for (std::size_t j = 0; j < depth.size(); ++j) {
        u64 here = depth[j] - (j + 1 < depth.size() ? depth[j + 1] : 0);
        for (u64 t = 0; t < here; ++t) factors.push_back(checked_pow(mod_.p, j + 1));
    }
    std::sort(factors.rbegin(), factors.rend());
    return factors;
}

CyclicActionModule::Submodule CyclicActionModule::submodule_from_keys(std::vector<u64> keys) const {
    Submodule s;
    s.elem_keys = closure(std::move(keys));
    // Greedy minimal generators, elements of maximal order first.
    std::vector<std::pair<u64, u64>> by_order; // (order, key)
    by_order.reserve(s.elem_keys.size());
    for (u64 k : s.elem_keys) {
        Vec v = decode(k);
        u64 o = 1;
        while (encode(v) != 0) {
            v = scalar_mul(mod_.p, v);
            o *= mod_.p;
        }
        by_order.emplace_back(o, k);
    }
    std::stable_sort(by_order.begin(), by_order.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::unordered_set<u64> span = {0};
    std::vector<u64> span_vec = {0};
    for (auto [o, k] : by_order) {
        if (k == 0 || span.count(k)) continue;
        s.generators.push_back(decode(k));
        Vec g = decode(k);
        Vec cur = g;
        std::vector<u64> base = span_vec;
        while (encode(cur) != 0) {
            for (u64 sk : base) {
                u64 nk = encode(add(decode(sk), cur));
                if (span.insert(nk).second) span_vec.push_back(nk);
            }
            cur = add(cur, g);
        }
        if (span_vec.size() == s.elem_keys.size()) break;
    }
    s.invariant_factors = invariant_factors_of_set(s.elem_keys);
    return s;
}

CyclicActionModule::Submodule CyclicActionModule::eigencomponent(const UnitCharacter& chi) const {
    // h·a = χ(h)·a for the generator suffices: the condition for h^j follows.
    std::vector<u64> keys;
    for (u64 k = 0; k < order_; ++k) {
        Vec a = decode(k);
        if (act(a) == scalar_mul(chi.gamma, a)) keys.push_back(k);
    }
    return submodule_from_keys(std::move(keys));
}

CyclicActionModule::Submodule CyclicActionModule::fixed_submodule() const {
    std::vector<u64> keys;
    for (u64 k = 0; k < order_; ++k) {
        Vec a = decode(k);
        if (act(a) == a) keys.push_back(k);
    }
    return submodule_from_keys(std::move(keys));
}

CyclicActionModule::Submodule CyclicActionModule::image(const Mat& m) const {
    std::vector<u64> keys;
    keys.reserve(order_);
    for (u64 k = 0; k < order_; ++k) keys.push_back(encode(apply(m, decode(k))));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return submodule_from_keys(std::move(keys));
}

CyclicActionModule::Submodule CyclicActionModule::kernel(const Mat& m) const {
    std::vector<u64> keys;
    for (u64 k = 0; k < order_; ++k)
        if (encode(apply(m, decode(k))) == 0) keys.push_back(k);
    return submodule_from_keys(std::move(keys));
}

std::vector<CyclicActionModule::Submodule> CyclicActionModule::eigen_decompose(
    const std::vector<UnitCharacter>& chars) const {
    if (gcd_u64(acting_order_, mod_.p) != 1)
        throw non_semisimple_error("eigen_decompose: acting order shares a factor with p");
    if (chars.size() != acting_order_)
        throw domain_error("eigen_decompose: need one character per group element");
    std::vector<Submodule> out;
    out.reserve(chars.size());
    for (const auto& chi : chars) {
        GroupRingElem e = idempotent_for(mod_, chi);
        Submodule proj = image(group_ring_matrix(e.coeffs));
        Submodule direct = eigencomponent(chi);
        require(proj.elem_keys == direct.elem_keys,
                "eigen_decompose: idempotent image differs from eigenmodule");
        out.push_back(std::move(proj));
    }
    return out;
}

std::vector<u64> CyclicActionModule::quotient_invariant_factors(const Submodule& K,
                                                                const Submodule& I) const {
    std::unordered_set<u64> iset(I.elem_keys.begin(), I.elem_keys.end());
    std::vector<u64> counts;
    counts.push_back(I.order());
    for (u64 j = 1; j <= mod_.n; ++j) {
        u64 pj = checked_pow(mod_.p, j);
        u64 c = 0;
        for (u64 k : K.elem_keys)
            if (iset.count(encode(scalar_mul(pj, decode(k))))) ++c;
        counts.push_back(c);
        if (c == K.order()) break;
    }
    std::vector<u64> depth;
    for (std::size_t j = 1; j < counts.size(); ++j)
        depth.push_back(p_valuation(counts[j] / counts[j - 1], mod_.p));
    std::vector<u64> factors;
    for (std::size_t j = 0; j < depth.size(); ++j) {
        u64 here = depth[j] - (j + 1 < depth.size() ? depth[j + 1] : 0);
        for (u64 t = 0; t < here; ++t) factors.push_back(checked_pow(mod_.p, j + 1));
    }
    std::sort(factors.rbegin(), factors.rend());
    return factors;
}

} // namespace ptower::alg
