#include "cyclex/factor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cyclex {

Poly Factorization::product(const Field& F) const {
    Poly acc = Poly::constant(F, unit);
    for (const auto& [p, mult] : factors)
        for (int i = 0; i < mult; ++i) acc = acc * p;
    return acc;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / 2 / base)
            fail(Errc::Overflow, "integer power overflow");
        r *= base;
    }
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) fail(Errc::Overflow, "integer product overflow");
    return a * b;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return checked_mul(a / std::gcd(a, b), b);
}

std::vector<Poly> irreducibles_up_to(const Field& F, std::uint32_t dmax, std::uint64_t budget) {
    auto cache = F.sieve_cache();
    std::scoped_lock lock(cache->mu);
    while (cache->complete_degree < dmax) {
        std::uint32_t d = cache->complete_degree + 1;
        std::uint64_t count = checked_pow(F.q(), d);
        if (cache->candidates_scanned + count > budget)
            fail(Errc::BudgetExceeded,
                 "irreducible sieve would scan more than " + std::to_string(budget) +
                     " candidates");
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            std::vector<Elem> c(d + 1, 0);
            std::uint64_t t = enc;
            for (std::uint32_t i = 0; i < d; ++i) {
                c[i] = (Elem)(t % F.q());
                t /= F.q();
            }
            c[d] = 1;
            Poly cand = Poly::from_coeffs(F, c);
            bool irreducible = true;
            for (const auto& fc : cache->coeffs) {
                if (2 * (fc.size() - 1) > d) break;
                if (divides(Poly::from_coeffs(F, fc), cand)) {
                    irreducible = false;
                    break;
                }
            }
            if (irreducible) cache->coeffs.push_back(std::move(c));
        }
        cache->candidates_scanned += count;
        cache->complete_degree = d;
    }
    std::vector<Poly> out;
    for (const auto& fc : cache->coeffs) {
        if (fc.size() - 1 > dmax) break;
        out.push_back(Poly::from_coeffs(F, fc));
    }
    return out;
}

namespace {

// Quotient of a by monic b over F if the division is exact, else empty.
// Raw coefficient vectors keep the sieve scan allocation-light.
bool try_divide(const Field& F, const std::vector<Elem>& a, const std::vector<Elem>& b,
                std::vector<Elem>& quot_out) {
    if (a.size() < b.size()) return false;
    std::vector<Elem> rem = a;
    std::vector<Elem> quot(a.size() - b.size() + 1, 0);
    std::size_t dd = b.size() - 1;
    for (std::size_t i = rem.size(); i-- > dd;) {
        Elem c = rem[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[i - dd + j] = F.sub(rem[i - dd + j], F.mul(c, b[j]));
    }
    for (std::size_t j = 0; j < dd; ++j)
        if (rem[j] != 0) return false;
    quot_out = std::move(quot);
    return true;
}

} // namespace

Factorization factor(const Poly& f, std::uint64_t sieve_budget) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "factorization of the zero polynomial");
    const Field& F = f.field();
    Factorization out{f.lead(), {}};
    Poly wp = f.monic();
    if (wp.is_constant()) return out;

    std::uint32_t max_trial = (std::uint32_t)wp.degree() / 2;
    if (max_trial > 0) irreducibles_up_to(F, max_trial, sieve_budget); // grow the cache

    std::vector<Elem> w = wp.coeffs();
    {
        auto cache = F.sieve_cache();
        std::scoped_lock lock(cache->mu);
        for (const auto& p : cache->coeffs) {
            if (w.size() <= 1) break;
            if (2 * (p.size() - 1) > w.size() - 1) break;
            int mult = 0;
            std::vector<Elem> quot;
            while (try_divide(F, w, p, quot)) {
                w = std::move(quot);
                ++mult;
            }
            if (mult > 0) out.factors.emplace_back(Poly::from_coeffs(F, p), mult);
        }
    }
    if (w.size() > 1) // residual of degree > deg/2 is irreducible
        out.factors.emplace_back(Poly::from_coeffs(F, std::move(w)), 1);

    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
    return out;
}

std::vector<std::pair<std::uint64_t, int>> int_factor(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        int mult = 0;
        while (n % d == 0) {
            n /= d;
            ++mult;
        }
        out.emplace_back(d, mult);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& modp) {
    const Field& F = base.field();
    Poly result = Poly::one(F);
    Poly b = divmod(base, modp).second;
    while (e > 0) {
        if (e & 1) result = divmod(result * b, modp).second;
        b = divmod(b * b, modp).second;
        e >>= 1;
    }
    return result;
}

namespace {

// Order of a monic irreducible p_i != x of degree mi: divides q^mi - 1; peel
// off prime factors while x^(E/r) is still 1 mod p_i. Memoized per field.
std::uint64_t irreducible_order(const Poly& pi) {
    const Field& F = pi.field();
    auto cache = F.sieve_cache();
    {
        std::scoped_lock lock(cache->mu);
        auto it = cache->irreducible_orders.find(pi.coeffs());
        if (it != cache->irreducible_orders.end()) return it->second;
    }
    std::uint64_t E = checked_pow(F.q(), (std::uint32_t)pi.degree()) - 1;
    Poly x = Poly::x(F);
    for (const auto& [r, mult] : int_factor(E)) {
        (void)mult;
        while (E % r == 0 && pow_mod(x, E / r, pi).is_one()) E /= r;
    }
    std::scoped_lock lock(cache->mu);
    cache->irreducible_orders.emplace(pi.coeffs(), E);
    return E;
}

} // namespace

std::uint64_t order_from_factors(const Field& F,
                                 const std::vector<std::pair<Poly, int>>& factors) {
    std::uint64_t e = 1;
    int max_mult = 0;
    for (const auto& [p, mult] : factors) {
        if (p.constant_term() == 0) continue; // the factor x never affects the order
        e = lcm_u64(e, irreducible_order(p));
        max_mult = std::max(max_mult, mult);
    }
    // repeated factors lift the order by the least p^t >= max multiplicity
    std::uint64_t lift = 1;
    while (lift < (std::uint64_t)max_mult) lift = checked_mul(lift, F.p());
    return checked_mul(e, lift);
}

std::uint64_t order(const Poly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "order of the zero polynomial");
    Poly g = strip_x_power(f).g;
    if (g.is_constant()) return 1; // units divide x^1 - 1
    return order_from_factors(f.field(), factor(g).factors);
}

bool order_divides_iff(const Poly& f, std::uint64_t r) {
    if (f.is_zero() || f.constant_term() == 0)
        fail(Errc::ZeroConstantTerm, "order divisibility needs f(0) != 0");
    if (r < 1) fail(Errc::ParseError, "exponent must be >= 1");
    return r % order(f) == 0;
}

} // namespace cyclex
