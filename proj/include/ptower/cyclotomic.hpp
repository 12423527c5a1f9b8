#pragma once

/// The cyclotomic field Q(ζ_m) = Q[x]/(Φ_m) with exact rational coefficients.

#include <string>
#include <vector>

#include "ptower/rational.hpp"
#include "ptower/zmodn.hpp"

namespace ptower::symbol {

class CycQ {
public:
    using Elem = std::vector<Rational>; // length φ(m)

    explicit CycQ(u64 m);

    u64 m() const { return m_; }
    u64 degree() const { return deg_; }
    u64 characteristic() const { return 0; }
    const std::vector<Rational>& modulus_poly() const { return phi_; }

    Elem zero() const { return Elem(deg_, Rational(0)); }
    Elem one() const;
    Elem from_int(i64 v) const;
    Elem from_rational(const Rational& r) const;
    Elem zeta() const; // designated primitive m-th root

    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem pow(const Elem& a, u64 e) const;

    /// Galois twist ζ ↦ ζ^t for gcd(t, m) = 1 (t = m-1 is complex
    /// conjugation).
    Elem galois(const Elem& a, u64 t) const;

    std::string str(const Elem& a) const;

    /// The m-th cyclotomic polynomial over Q (monic, exact).
    static std::vector<Rational> cyclotomic_poly(u64 m);

private:
    u64 m_;
    u64 deg_;
    std::vector<Rational> phi_;
};

} // namespace ptower::symbol
