#include "cyclex/code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclex {

CyclicCode code_from_divisor(std::uint32_t n, const Field& F, const Poly& g) {
    Poly xn1 = x_pow_minus_one(F, n);
    auto [h, rem] = divmod(xn1, g);
    if (!rem.is_zero()) throw std::logic_error("generator does not divide x^n - 1");
    std::uint32_t k = n - (std::uint32_t)g.degree();
    return CyclicCode(n, F, g, std::move(h), k);
}

CyclicCode CyclicCode::make(std::uint32_t n, const Field& F, const Poly& g_raw) {
    if (n < 1) fail(Errc::ParseError, "code length must be >= 1");
    if (g_raw.field() != F) fail(Errc::FieldMismatch, "generator over a different field");
    if (g_raw.is_zero())
        fail(Errc::ZeroGenerator, "zero generator; use the explicit zero-code constructor");
    Poly g = gcd(g_raw, x_pow_minus_one(F, n));
    return code_from_divisor(n, F, g);
}

CyclicCode CyclicCode::zero_code(std::uint32_t n, const Field& F) {
    return code_from_divisor(n, F, x_pow_minus_one(F, n));
}

CyclicCode CyclicCode::full_code(std::uint32_t n, const Field& F) {
    return code_from_divisor(n, F, Poly::one(F));
}

std::uint64_t exponent(const CyclicCode& C) { return order(C.g()); }

CyclicCode dual(const CyclicCode& C) {
    return code_from_divisor(C.n(), C.field(), reciprocal(C.h()).monic());
}

LcmCheck exponent_lcm_check(const CyclicCode& C) {
    if (!gcd(C.g(), C.h()).is_one()) return {false, false};
    std::uint64_t e = exponent(C);
    std::uint64_t r = exponent(dual(C));
    return {true, lcm_u64(e, r) == C.n()};
}

namespace {

void require_compatible(const CyclicCode& a, const CyclicCode& b) {
    if (a.n() != b.n()) fail(Errc::LengthMismatch, "codes of different length");
    if (a.field() != b.field()) fail(Errc::FieldMismatch, "codes over different fields");
}

} // namespace

CyclicCode code_sum(const CyclicCode& a, const CyclicCode& b) {
    require_compatible(a, b);
    return code_from_divisor(a.n(), a.field(), gcd(a.g(), b.g()));
}

CyclicCode code_intersect(const CyclicCode& a, const CyclicCode& b) {
    require_compatible(a, b);
    Poly l = divmod(a.g() * b.g(), gcd(a.g(), b.g())).first.monic();
    return code_from_divisor(a.n(), a.field(), l);
}

Poly encode(const CyclicCode& C, const Poly& a) {
    if (a.field() != C.field()) fail(Errc::FieldMismatch, "information polynomial field");
    if (!a.is_zero() && a.degree() >= (int)C.k())
        fail(Errc::InformationTooLong, "information polynomial degree must be < k = " +
                                           std::to_string(C.k()));
    return a * C.g();
}

bool contains(const CyclicCode& C, const Poly& c) {
    if (c.field() != C.field()) fail(Errc::FieldMismatch, "codeword field");
    if (!c.is_zero() && c.degree() >= (int)C.n())
        fail(Errc::DegreeTooLarge, "codeword degree must be < n");
    return divmod(c, C.g()).second.is_zero();
}

namespace {

std::uint64_t codeword_count(const CyclicCode& C, const Budget& budget) {
    std::uint64_t total = checked_pow(C.field().q(), C.k());
    if (total > budget.codewords)
        fail(Errc::BudgetExceeded, "q^k = " + std::to_string(total) +
                                       " exceeds codeword budget " +
                                       std::to_string(budget.codewords));
    return total;
}

Poly info_poly(const Field& F, std::uint64_t index, std::uint32_t k) {
    std::vector<Elem> c(k, 0);
    for (std::uint32_t i = 0; i < k && index > 0; ++i) {
        c[i] = (Elem)(index % F.q());
        index /= F.q();
    }
    return Poly::from_coeffs(F, std::move(c));
}

} // namespace

std::vector<Poly> codewords(const CyclicCode& C, const Budget& budget) {
    std::uint64_t total = codeword_count(C, budget);
    std::vector<Poly> out;
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i)
        out.push_back(info_poly(C.field(), i, C.k()) * C.g());
    return out;
}

std::map<std::uint64_t, std::uint64_t> ExponentDistribution::overflow_orders() const {
    std::map<std::uint64_t, std::uint64_t> out;
    for (const auto& [t, b] : counts)
        if (t > in_range.size()) out.emplace(t, b);
    return out;
}

ExponentDistribution exponent_distribution(const CyclicCode& C, const Budget& budget) {
    std::uint64_t total = codeword_count(C, budget);
    ExponentDistribution dist;
    dist.code_size = total;
    dist.in_range.assign(C.n(), 0);
    dist.overflow = 0;
    // order of a*g from factor(a) and the fixed factor(g), multiplicatively
    Factorization g_fac = factor(C.g());
    for (std::uint64_t i = 1; i < total; ++i) {
        Poly a = info_poly(C.field(), i, C.k());
        std::vector<std::pair<Poly, int>> factors = factor(a).factors;
        for (const auto& [p, mult] : g_fac.factors) {
            auto it = std::find_if(factors.begin(), factors.end(),
                                   [&p = p](const auto& f) { return f.first == p; });
            if (it != factors.end())
                it->second += mult;
            else
                factors.emplace_back(p, mult);
        }
        std::uint64_t t = order_from_factors(C.field(), factors);
        ++dist.counts[t];
        if (t <= C.n())
            ++dist.in_range[t - 1];
        else
            ++dist.overflow;
    }
    return dist;
}

BasisOrders basis_orders(const CyclicCode& C) {
    if (C.k() == 0) fail(Errc::ZeroDimensional, "the zero code has no basis");
    std::uint64_t e = order(C.g());
    Poly b = C.g();
    for (std::uint32_t i = 1; i < C.k(); ++i) {
        b = b * Poly::x(C.field());
        if (order(b) != e) throw std::logic_error("basis polynomial orders differ");
    }
    return {e, C.k()};
}

std::vector<CyclicCode> enumerate_codes(std::uint32_t n, const Field& F, const Budget& budget) {
    if (n < 1) fail(Errc::ParseError, "code length must be >= 1");
    Factorization fac = factor(x_pow_minus_one(F, n));
    std::uint64_t total = 1;
    for (const auto& [p, mult] : fac.factors) {
        (void)p;
        total = checked_mul(total, (std::uint64_t)mult + 1);
        if (total > budget.divisors)
            fail(Errc::BudgetExceeded, "divisor count exceeds budget " +
                                           std::to_string(budget.divisors));
    }
    std::vector<Poly> divisors;
    std::vector<int> pick(fac.factors.size(), 0);
    for (;;) {
        Poly g = Poly::one(F);
        for (std::size_t i = 0; i < pick.size(); ++i)
            for (int j = 0; j < pick[i]; ++j) g = g * fac.factors[i].first;
        divisors.push_back(g);
        std::size_t i = 0;
        while (i < pick.size() && pick[i] == fac.factors[i].second) pick[i++] = 0;
        if (i == pick.size()) break;
        ++pick[i];
    }
    std::sort(divisors.begin(), divisors.end(),
              [](const Poly& a, const Poly& b) { return compare(a, b) < 0; });
    std::vector<CyclicCode> out;
    out.reserve(divisors.size());
    for (const Poly& g : divisors) out.push_back(code_from_divisor(n, F, g));
    return out;
}

} // namespace cyclex
