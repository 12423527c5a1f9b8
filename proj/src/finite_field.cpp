#include "ptower/finite_field.hpp"

#include <algorithm>

namespace ptower::symbol {

namespace {

// Dense polynomial helpers over F_p; vectors are coefficient lists with the
// constant term first and no trailing-zero guarantees.

void trim(std::vector<u64>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<u64> pmul(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

std::vector<u64> psub(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
    trim(a);
    return a;
}

// a mod m for monic m.
std::vector<u64> pmod(std::vector<u64> a, const std::vector<u64>& m, u64 p) {
    trim(a);
    while (a.size() >= m.size()) {
        u64 lead = a.back();
        std::size_t shift = a.size() - m.size();
        if (lead != 0)
            for (std::size_t i = 0; i < m.size(); ++i)
                a[shift + i] = submod(a[shift + i], mulmod(lead, m[i], p), p);
        a.pop_back();
        trim(a);
    }
    return a;
}

std::vector<u64> ppowmod(std::vector<u64> base, u64 e, const std::vector<u64>& m, u64 p) {
    std::vector<u64> r = {1};
    base = pmod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = pmod(pmul(r, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

std::vector<u64> pgcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic for the reduction
        u64 linv = invmod(b.back(), p);
        std::vector<u64> bm = b;
        for (auto& c : bm) c = mulmod(c, linv, p);
        a = pmod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const std::vector<u64>& f, u64 p) {
    u64 k = f.size() - 1;
    if (k == 0) return false;
    // x^(p^k) ≡ x (mod f) and gcd(x^(p^j) - x, f) = 1 for j ≤ k/2.
    std::vector<u64> xp = {0, 1}; // x
    std::vector<u64> frob = xp;
    for (u64 j = 1; j <= k; ++j) {
        frob = ppowmod(frob, p, f, p);
        if (j <= k / 2) {
            auto g = pgcd(psub(frob, xp, p), f, p);
            if (!(g.size() == 1)) return false;
        }
    }
    auto diff = psub(frob, xp, p);
    return diff.empty();
}

} // namespace

Fq::Fq(u64 p, u64 k) : p_(p), k_(k) {
    if (!is_prime(p)) throw domain_error("Fq: p must be prime");
    if (k == 0) throw domain_error("Fq: degree must be positive");
    order_ = checked_pow(p, k);
    if (order_ > (1u << 24)) throw too_large_error("Fq: field too large for explicit arithmetic");
    if (k == 1) {
        modulus_ = {0, 1}; // x
        return;
    }
    // Least modulus in base-p encoding of the non-leading coefficients.
    for (u64 code = 0; code < order_; ++code) {
        std::vector<u64> f(k + 1, 0);
        u64 c = code;
        for (u64 i = 0; i < k; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[k] = 1;
        if (is_irreducible(f, p)) {
            modulus_ = std::move(f);
            return;
        }
    }
    throw check_failure("Fq: no irreducible polynomial found");
}

Fq::Elem Fq::one() const {
    Elem e(k_, 0);
    e[0] = 1;
    return e;
}

Fq::Elem Fq::from_int(i64 v) const {
    i64 m = (i64)p_;
    i64 r = ((v % m) + m) % m;
    Elem e(k_, 0);
    e[0] = (u64)r;
    return e;
}

Fq::Elem Fq::x() const {
    if (k_ < 2) throw domain_error("Fq: x is not a proper element of the prime field");
    Elem e(k_, 0);
    e[1] = 1;
    return e;
}

bool Fq::is_zero(const Elem& a) const {
    for (u64 c : a)
        if (c) return false;
    return true;
}

Fq::Elem Fq::add(const Elem& a, const Elem& b) const {
    Elem r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = addmod(a[i], b[i], p_);
    return r;
}

Fq::Elem Fq::sub(const Elem& a, const Elem& b) const {
    Elem r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = submod(a[i], b[i], p_);
    return r;
}

Fq::Elem Fq::neg(const Elem& a) const { return sub(zero(), a); }

std::vector<u64> Fq::poly_mul_mod(const std::vector<u64>& a, const std::vector<u64>& b) const {
    return pmod(pmul(a, b, p_), modulus_, p_);
}

Fq::Elem Fq::mul(const Elem& a, const Elem& b) const {
    auto r = poly_mul_mod(a, b);
    r.resize(k_, 0);
    return r;
}

Fq::Elem Fq::pow(const Elem& a, u64 e) const {
    auto r = ppowmod(a, e, modulus_, p_);
    r.resize(k_, 0);
    return r;
}

Fq::Elem Fq::inv(const Elem& a) const {
    if (is_zero(a)) throw domain_error("Fq: inverse of zero");
    // Extended Euclid in F_p[x].
    std::vector<u64> r0 = modulus_, r1 = a;
    trim(r1);
    std::vector<u64> t0, t1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<u64> q;
        std::vector<u64> rem = r0;
        trim(rem);
        u64 linv = invmod(r1.back(), p_);
        while (rem.size() >= r1.size() && !rem.empty()) {
            u64 coef = mulmod(rem.back(), linv, p_);
            std::size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = addmod(q[shift], coef, p_);
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = submod(rem[shift + i], mulmod(coef, r1[i], p_), p_);
            trim(rem);
        }
        r0 = r1;
        r1 = rem;
        auto t2 = psub(t0, pmul(q, t1, p_), p_);
        t0 = t1;
        t1 = t2;
    }
    // r0 = gcd is a nonzero constant.
    require(r0.size() == 1 && r0[0] != 0, "Fq: modulus not coprime to element");
    u64 scale = invmod(r0[0], p_);
    for (auto& c : t0) c = mulmod(c, scale, p_);
    t0.resize(k_, 0);
    return t0;
}

u64 Fq::encode(const Elem& a) const {
    u64 idx = 0;
    for (std::size_t i = k_; i-- > 0;) idx = idx * p_ + a[i];
    return idx;
}

Fq::Elem Fq::decode(u64 idx) const {
    Elem e(k_);
    for (std::size_t i = 0; i < k_; ++i) {
        e[i] = idx % p_;
        idx /= p_;
    }
    return e;
}

u64 Fq::elem_order(const Elem& a) const {
    if (is_zero(a)) throw domain_error("Fq: order of zero");
    u64 o = 1;
    Elem x = a;
    while (!eq(x, one())) {
        x = mul(x, a);
        ++o;
    }
    return o;
}

Fq::Elem Fq::generator() const {
    u64 m = order_ - 1;
    auto fac = prime_factors(m);
    for (u64 idx = 1; idx < order_; ++idx) {
        Elem cand = decode(idx);
        bool ok = true;
        for (u64 r : fac)
            if (eq(pow(cand, m / r), one())) {
                ok = false;
                break;
            }
        if (ok) return cand;
    }
    throw check_failure("Fq: no generator found");
}

Fq::Elem Fq::element_of_order(u64 m) const {
    if (m == 0 || (order_ - 1) % m != 0)
        throw not_primitive_root_error("Fq: no element of that multiplicative order");
    Elem z = pow(generator(), (order_ - 1) / m);
    require(elem_order(z) == m, "Fq: constructed root has wrong order");
    return z;
}

bool Fq::is_power(const Elem& a, u64 d) const {
    if (is_zero(a)) throw domain_error("Fq: zero has no power class");
    u64 g = gcd_u64(d, order_ - 1);
    return eq(pow(a, (order_ - 1) / g), one());
}

std::string Fq::str(const Elem& a) const {
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        if (!first) s += "+";
        first = false;
        if (i == 0 || a[i] != 1) s += std::to_string(a[i]);
        if (i >= 1) {
            if (a[i] != 1) s += "*";
            s += "x";
        }
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

} // namespace ptower::symbol
