#pragma once

/// Explicit finite fields F_{p^k} as polynomial quotients F_p[x]/(f) where f
/// is the lexicographically least monic irreducible of degree k (coefficients
/// read as a base-p integer, constant term least significant). Element
/// arithmetic is exact; used where field elements (not just orders) matter.

#include <string>
#include <vector>

#include "ptower/zmodn.hpp"

namespace ptower::symbol {

class Fq {
public:
    using Elem = std::vector<u64>; // length = degree, coefficients mod p

    Fq(u64 p, u64 k);

    u64 p() const { return p_; }
    u64 degree() const { return k_; }
    u64 order() const { return order_; } // p^k
    u64 characteristic() const { return p_; }
    const std::vector<u64>& modulus_poly() const { return modulus_; } // monic, length k+1

    Elem zero() const { return Elem(k_, 0); }
    Elem one() const;
    Elem from_int(i64 v) const;
    Elem x() const; // the class of x (degree ≥ 2 only)

    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem pow(const Elem& a, u64 e) const;

    u64 encode(const Elem& a) const;
    Elem decode(u64 idx) const;

    u64 elem_order(const Elem& a) const;
    Elem generator() const; // least encoded multiplicative generator
    /// An element of exact multiplicative order m (least encoded); throws
    /// not_primitive_root_error if m does not divide p^k - 1.
    Elem element_of_order(u64 m) const;

    /// Is a a d-th power in F*? (a must be nonzero.)
    bool is_power(const Elem& a, u64 d) const;

    std::string str(const Elem& a) const;

private:
    u64 p_;
    u64 k_;
    u64 order_;
    std::vector<u64> modulus_;

    std::vector<u64> poly_mul_mod(const std::vector<u64>& a, const std::vector<u64>& b) const;
};

} // namespace ptower::symbol
