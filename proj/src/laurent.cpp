#include "ptower/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace ptower::valn {

namespace {

Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

const Exp& lexmin(const Exp& a, const Exp& b) { return RightLexLess{}(a, b) ? a : b; }

} // namespace

void LaurentField::clean(Elem& a) const {
    for (auto it = a.terms.begin(); it != a.terms.end();) {
        bool drop = k_.is_zero(it->second);
        if (a.unknown_from && !RightLexLess{}(it->first, *a.unknown_from)) drop = true;
        it = drop ? a.terms.erase(it) : std::next(it);
    }
}

LaurentField::Elem LaurentField::monomial(const symbol::Fq::Elem& c, Exp e) const {
    if (e.size() != rank_) throw domain_error("LaurentField: exponent rank mismatch");
    Elem r;
    if (!k_.is_zero(c)) r.terms.emplace(std::move(e), c);
    return r;
}

LaurentField::Elem LaurentField::truncated(Elem a, Exp bound) const {
    if (bound.size() != rank_) throw domain_error("LaurentField: bound rank mismatch");
    if (!a.unknown_from || RightLexLess{}(bound, *a.unknown_from)) a.unknown_from = bound;
    clean(a);
    return a;
}

LaurentField::Elem LaurentField::add(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (const auto& [e, c] : b.terms) {
        auto it = r.terms.find(e);
        if (it == r.terms.end())
            r.terms.emplace(e, c);
        else
            it->second = k_.add(it->second, c);
    }
    if (b.unknown_from &&
        (!r.unknown_from || RightLexLess{}(*b.unknown_from, *r.unknown_from)))
        r.unknown_from = b.unknown_from;
    clean(r);
    return r;
}

LaurentField::Elem LaurentField::neg(const Elem& a) const {
    Elem r = a;
    for (auto& [e, c] : r.terms) c = k_.neg(c);
    return r;
}

LaurentField::Elem LaurentField::mul(const Elem& a, const Elem& b) const {
    if (known_zero(a) || known_zero(b)) return zero();
    Elem r;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            Exp e = exp_add(ea, eb);
            auto it = r.terms.find(e);
            if (it == r.terms.end())
                r.terms.emplace(std::move(e), k_.mul(ca, cb));
            else
                it->second = k_.add(it->second, k_.mul(ca, cb));
        }
    // Truncation: the unknown tail of one factor multiplies the smallest
    // possible exponent of the other.
    auto min_exp = [&](const Elem& x) -> Exp {
        if (!x.terms.empty()) return x.terms.begin()->first;
        return *x.unknown_from;
    };
    std::optional<Exp> bound;
    if (a.unknown_from) bound = exp_add(*a.unknown_from, min_exp(b));
    if (b.unknown_from) {
        Exp cand = exp_add(*b.unknown_from, min_exp(a));
        bound = bound ? lexmin(*bound, cand) : cand;
    }
    r.unknown_from = bound;
    clean(r);
    return r;
}

LaurentField::Valuation LaurentField::valuate(const Elem& a) const {
    if (a.terms.empty())
        throw precision_exhausted_error(
            a.exact() ? "valuate: element is zero" : "valuate: zero to the known precision");
    return {a.terms.begin()->first, a.terms.begin()->second};
}

LaurentField::Elem LaurentField::parse(const std::string& text) const {
    Elem total = zero();
    std::string cleaned;
    for (char ch : text)
        if (!isspace((unsigned char)ch)) cleaned += ch;
    // Split into monomials on '+' and '-' (sign kept with the monomial).
    std::vector<std::string> monos;
    std::string cur;
    for (std::size_t i = 0; i < cleaned.size(); ++i) {
        char ch = cleaned[i];
        if ((ch == '+' || ch == '-') && i > 0 && cleaned[i - 1] != '^' && cleaned[i - 1] != '*') {
            monos.push_back(cur);
            cur.clear();
        }
        cur += ch;
    }
    if (!cur.empty()) monos.push_back(cur);

    auto var_index = [&](const std::string& name) -> u64 {
        if (name == "x") return 0;
        if (name == "y") return 1;
        if (name == "z") return 2;
        if (name.size() >= 2 && name[0] == 'x') {
            u64 idx = std::stoull(name.substr(1));
            if (idx >= 1 && idx <= rank_) return idx - 1;
        }
        throw domain_error("LaurentField: unknown variable '" + name + "'");
    };

    for (auto& mono : monos) {
        if (mono.empty()) continue;
        i64 sign = 1;
        std::size_t pos = 0;
        if (mono[0] == '+') pos = 1;
        if (mono[0] == '-') {
            sign = -1;
            pos = 1;
        }
        i64 coeff = 1;
        Exp e(rank_, 0);
        std::string rest = mono.substr(pos);
        std::stringstream ss(rest);
        std::string factor;
        bool any = false;
        while (std::getline(ss, factor, '*')) {
            if (factor.empty()) continue;
            any = true;
            if (isdigit((unsigned char)factor[0])) {
                std::size_t used = 0;
                coeff *= std::stoll(factor, &used);
                if (used != factor.size())
                    throw domain_error("LaurentField: malformed factor '" + factor +
                                       "' (write coefficients as 2*x, not 2x)");
                continue;
            }
            std::size_t caret = factor.find('^');
            std::string name = factor.substr(0, caret == std::string::npos ? factor.size() : caret);
            i64 power = 1;
            if (caret != std::string::npos) power = std::stoll(factor.substr(caret + 1));
            e[var_index(name)] += power;
        }
        if (!any) throw domain_error("LaurentField: empty monomial in '" + text + "'");
        total = add(total, monomial(k_.from_int(sign * coeff), e));
    }
    return total;
}

std::string LaurentField::str(const Elem& a) const {
    static const char* names[3] = {"x", "y", "z"};
    std::string s;
    for (const auto& [e, c] : a.terms) {
        if (!s.empty()) s += " + ";
        std::string mono = k_.str(c);
        for (std::size_t i = 0; i < rank_; ++i) {
            if (e[i] == 0) continue;
            mono += "*";
            mono += (rank_ <= 3 ? names[i] : "x" + std::to_string(i + 1));
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        s += mono;
    }
    if (s.empty()) s = a.exact() ? "0" : "O(?)";
    if (a.unknown_from) s += " + O(...)";
    return s;
}

} // namespace ptower::valn
