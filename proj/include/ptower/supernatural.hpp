#pragma once

/// Supernatural numbers: formal products Π p_i^{r_i} with r_i ∈ N ∪ {∞},
/// used as degrees of infinite algebraic extensions.

#include <cstdint>
#include <map>
#include <string>

#include "ptower/zmodn.hpp"

namespace ptower {

class Supernatural {
public:
    static constexpr u64 INF = UINT64_MAX;

    Supernatural() = default;

    static Supernatural one() { return Supernatural(); }

    static Supernatural from_u64(u64 n) {
        if (n == 0) throw domain_error("Supernatural: zero has no factorization");
        Supernatural s;
        for (u64 d = 2; d * d <= n; ++d)
            while (n % d == 0) {
                s.exps_[d] += 1;
                n /= d;
            }
        if (n > 1) s.exps_[n] += 1;
        return s;
    }

    Supernatural& set(u64 prime, u64 exp) {
        if (!is_prime(prime)) throw domain_error("Supernatural: factor base must be prime");
        if (exp == 0)
            exps_.erase(prime);
        else
            exps_[prime] = exp;
        return *this;
    }

    u64 exponent(u64 prime) const {
        auto it = exps_.find(prime);
        return it == exps_.end() ? 0 : it->second;
    }

    friend Supernatural operator*(const Supernatural& a, const Supernatural& b) {
        Supernatural r = a;
        for (auto [p, e] : b.exps_) {
            u64& cur = r.exps_[p];
            cur = (cur == INF || e == INF) ? INF : cur + e;
        }
        return r;
    }

    bool divides(const Supernatural& other) const {
        for (auto [p, e] : exps_) {
            u64 oe = other.exponent(p);
            if (oe != INF && (e == INF || e > oe)) return false;
        }
        return true;
    }

    friend Supernatural gcd(const Supernatural& a, const Supernatural& b) {
        Supernatural r;
        for (auto [p, e] : a.exps_) {
            u64 m = std::min(e, b.exponent(p));
            if (m) r.exps_[p] = m;
        }
        return r;
    }

    friend Supernatural lcm(const Supernatural& a, const Supernatural& b) {
        Supernatural r = a;
        for (auto [p, e] : b.exps_) {
            u64& cur = r.exps_[p];
            cur = std::max(cur, e);
        }
        return r;
    }

    bool operator==(const Supernatural& o) const { return exps_ == o.exps_; }

    // Multiplicativity of degrees in a tower K/E/F.
    static bool tower_check(const Supernatural& deg_KE, const Supernatural& deg_EF,
                            const Supernatural& deg_KF) {
        return deg_KE * deg_EF == deg_KF;
    }

    std::string str() const {
        if (exps_.empty()) return "1";
        std::string s;
        for (auto [p, e] : exps_) {
            if (!s.empty()) s += "*";
            s += std::to_string(p);
            if (e == INF)
                s += "^inf";
            else if (e > 1)
                s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::map<u64, u64> exps_;
};

} // namespace ptower
