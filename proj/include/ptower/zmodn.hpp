#pragma once

/// Exact arithmetic mod p^n and elementary multiplicative number theory.
///
/// Everything here is integer arithmetic on uint64 values with __int128
/// intermediates; operations throw instead of overflowing silently.

#include <cstdint>
#include <optional>
#include <vector>

#include "ptower/errors.hpp"

namespace ptower {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a % m + b % m;
    return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) {
    a %= m;
    b %= m;
    return a >= b ? a - b : a + m - b;
}

inline u64 powmod(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline u64 lcm_u64(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    u64 g = gcd_u64(a, b);
    u128 l = (u128)(a / g) * b;
    if (l > (u128)UINT64_MAX) throw std::overflow_error("lcm overflows 64 bits");
    return (u64)l;
}

// Extended Euclid on signed 128-bit values: returns g = gcd(a,b) and x with ax ≡ g (mod b).
inline u64 invmod(u64 a, u64 m) {
    i128 t = 0, newt = 1, r = (i128)m, newr = (i128)(a % m);
    while (newr != 0) {
        i128 q = r / newr;
        i128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw not_coprime_error("invmod: element not invertible");
    if (t < 0) t += m;
    return (u64)t;
}

inline u64 checked_pow(u64 base, u64 exp) {
    u128 r = 1;
    for (u64 i = 0; i < exp; ++i) {
        r *= base;
        if (r > (u128)UINT64_MAX) throw std::overflow_error("checked_pow overflows 64 bits");
    }
    return (u64)r;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// q = prime^k with k ≥ 1, or nothing.
inline std::optional<std::pair<u64, u64>> prime_power_split(u64 q) {
    if (q < 2) return std::nullopt;
    for (u64 d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            u64 k = 0, m = q;
            while (m % d == 0) {
                m /= d;
                ++k;
            }
            if (m != 1) return std::nullopt;
            return std::make_pair(d, k);
        }
    }
    return std::make_pair(q, (u64)1); // prime
}

inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> ps;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Order of a in (Z/mZ)*; requires gcd(a,m) = 1.
inline u64 multiplicative_order(u64 a, u64 m) {
    a %= m;
    if (m == 1) return 1;
    if (gcd_u64(a, m) != 1) throw not_coprime_error("multiplicative_order: gcd(a,m) != 1");
    u64 x = a % m, ord = 1;
    while (x != 1) {
        x = mulmod(x, a, m);
        ++ord;
        if (ord > m) throw check_failure("multiplicative_order: did not terminate");
    }
    return ord;
}

// Largest k with p^k | n (n > 0).
inline u64 p_valuation(u64 n, u64 p) {
    u64 v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

/// The ring Z/p^nZ for an odd prime p.
struct Modulus {
    u64 p = 3;
    u64 n = 1;
    u64 value = 3; // p^n

    Modulus() = default;
    Modulus(u64 p_, u64 n_) : p(p_), n(n_), value(checked_pow(p_, n_)) {
        if (!is_prime(p) || p < 3) throw domain_error("Modulus: p must be an odd prime");
        if (n < 1) throw domain_error("Modulus: n must be positive");
    }

    u64 unit_group_order() const { return (p - 1) * value / p; } // φ(p^n)
    u64 reduce(u64 x) const { return x % value; }
    bool is_unit(u64 x) const { return x % p != 0; }

    bool operator==(const Modulus& o) const { return p == o.p && n == o.n; }
};

// Smallest primitive root mod p^n, p odd. A primitive root g mod p lifts to p^n
// unless g^(p-1) ≡ 1 (mod p^2), in which case g + p works.
inline u64 primitive_root(const Modulus& m) {
    auto fac = prime_factors(m.p - 1);
    u64 g = 0;
    for (u64 c = 2; c < m.p; ++c) {
        bool ok = true;
        for (u64 q : fac)
            if (powmod(c, (m.p - 1) / q, m.p) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            g = c;
            break;
        }
    }
    require(g != 0, "primitive_root: no generator found mod p");
    if (m.n == 1) return g;
    if (powmod(g, m.p - 1, m.p * m.p) == 1) g += m.p;
    return g % m.value;
}

} // namespace ptower
