#include "ptower/cyclotomic.hpp"

namespace ptower::symbol {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Poly pmul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly psub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Exact division a / b (throws if not exact), b nonzero.
Poly pdiv_exact(Poly a, const Poly& b) {
    trim(a);
    Poly q;
    while (a.size() >= b.size() && !a.empty()) {
        Rational coef = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
        q[shift] += coef;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= coef * b[i];
        trim(a);
    }
    if (!a.empty()) throw check_failure("cyclotomic: division not exact");
    return q;
}

// a mod m for monic m.
Poly pmod(Poly a, const Poly& m) {
    trim(a);
    while (a.size() >= m.size()) {
        Rational lead = a.back();
        std::size_t shift = a.size() - m.size();
        if (!lead.is_zero())
            for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] -= lead * m[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

} // namespace

std::vector<Rational> CycQ::cyclotomic_poly(u64 m) {
    // x^m - 1 = Π_{d | m} Φ_d.
    Poly num(m + 1, Rational(0));
    num[0] = Rational(-1);
    num[m] = Rational(1);
    for (u64 d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = pdiv_exact(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

CycQ::CycQ(u64 m) : m_(m) {
    if (m == 0) throw domain_error("CycQ: m must be positive");
    phi_ = cyclotomic_poly(m);
    deg_ = phi_.size() - 1;
}

CycQ::Elem CycQ::one() const {
    Elem e = zero();
    e[0] = Rational(1);
    return e;
}

CycQ::Elem CycQ::from_int(i64 v) const {
    Elem e = zero();
    e[0] = Rational(v);
    return e;
}

CycQ::Elem CycQ::from_rational(const Rational& r) const {
    Elem e = zero();
    e[0] = r;
    return e;
}

CycQ::Elem CycQ::zeta() const {
    // Class of x; for deg = 1 reduce x mod Φ_m (ζ_1 = 1, ζ_2 = -1).
    Poly x = {Rational(0), Rational(1)};
    auto r = pmod(std::move(x), phi_);
    r.resize(deg_, Rational(0));
    return r;
}

bool CycQ::is_zero(const Elem& a) const {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

CycQ::Elem CycQ::add(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (std::size_t i = 0; i < deg_; ++i) r[i] = a[i] + b[i];
    return r;
}

CycQ::Elem CycQ::sub(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (std::size_t i = 0; i < deg_; ++i) r[i] = a[i] - b[i];
    return r;
}

CycQ::Elem CycQ::neg(const Elem& a) const { return sub(zero(), a); }

CycQ::Elem CycQ::mul(const Elem& a, const Elem& b) const {
    auto r = pmod(pmul(a, b), phi_);
    r.resize(deg_, Rational(0));
    return r;
}

CycQ::Elem CycQ::pow(const Elem& a, u64 e) const {
    Elem r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

CycQ::Elem CycQ::inv(const Elem& a) const {
    if (is_zero(a)) throw domain_error("CycQ: inverse of zero");
    // Extended Euclid in Q[x] against Φ_m.
    Poly r0 = phi_, r1(a.begin(), a.end());
    trim(r1);
    Poly t0, t1 = {Rational(1)};
    while (!r1.empty()) {
        Poly q;
        Poly rem = r0;
        trim(rem);
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational coef = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
            q[shift] += coef;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= coef * r1[i];
            trim(rem);
        }
        r0 = r1;
        r1 = rem;
        auto t2 = psub(t0, pmul(q, t1));
        t0 = t1;
        t1 = t2;
    }
    require(r0.size() == 1 && !r0[0].is_zero(), "CycQ: element shares a factor with the modulus");
    Rational scale = Rational(1) / r0[0];
    Elem out(deg_, Rational(0));
    for (std::size_t i = 0; i < t0.size() && i < deg_; ++i) out[i] = t0[i] * scale;
    return out;
}

CycQ::Elem CycQ::galois(const Elem& a, u64 t) const {
    if (gcd_u64(t % m_, m_) != 1) throw not_coprime_error("CycQ: Galois twist needs gcd(t,m)=1");
    // ζ^i ↦ ζ^(ti); compute via substitution x ↦ x^t mod Φ_m.
    Elem out = zero();
    Elem zt = pow(zeta(), t % m_);
    Elem acc = one();
    for (std::size_t i = 0; i < deg_; ++i) {
        for (std::size_t j = 0; j < deg_; ++j) out[j] += a[i] * acc[j];
        acc = mul(acc, zt);
    }
    return out;
}

std::string CycQ::str(const Elem& a) const {
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < deg_; ++i) {
        if (a[i].is_zero()) continue;
        if (!first) s += "+";
        first = false;
        s += a[i].str();
        if (i >= 1) s += "*z";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

} // namespace ptower::symbol
