#ifndef CYCLEX_CODE_HPP
#define CYCLEX_CODE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "cyclex/factor.hpp"
#include "cyclex/poly.hpp"

namespace cyclex {

/// Enumeration caps; exceeding any of them raises BudgetExceeded.
struct Budget {
    std::uint64_t codewords = 1'000'000;
    std::uint64_t divisors = 10'000;
};

/// Cyclic code of length n over GF(q), as the ideal of F_q[x]/(x^n - 1)
/// generated by the canonical monic g | x^n - 1. The zero code is g = x^n - 1
/// and the full code g = 1. Immutable after construction.
class CyclicCode {
public:
    /// Canonicalizes an arbitrary nonzero generator via gcd with x^n - 1.
    static CyclicCode make(std::uint32_t n, const Field& F, const Poly& g_raw);
    static CyclicCode zero_code(std::uint32_t n, const Field& F);
    static CyclicCode full_code(std::uint32_t n, const Field& F);

    std::uint32_t n() const { return n_; }
    const Field& field() const { return field_; }
    const Poly& g() const { return g_; }
    const Poly& h() const { return h_; }
    std::uint32_t k() const { return k_; }

    bool operator==(const CyclicCode& o) const {
        return n_ == o.n_ && field_ == o.field_ && g_ == o.g_;
    }

private:
    CyclicCode(std::uint32_t n, const Field& F, Poly g, Poly h, std::uint32_t k)
        : n_(n), field_(F), g_(std::move(g)), h_(std::move(h)), k_(k) {}
    friend CyclicCode code_from_divisor(std::uint32_t n, const Field& F, const Poly& g);

    std::uint32_t n_;
    Field field_;
    Poly g_;
    Poly h_;
    std::uint32_t k_;
};

/// Internal-ish constructor for a g already known to divide x^n - 1 exactly.
CyclicCode code_from_divisor(std::uint32_t n, const Field& F, const Poly& g);

/// exp(C) = order of the generator polynomial.
std::uint64_t exponent(const CyclicCode& C);

/// Dual code: cyclic with generator the monic-normalized reciprocal of h.
CyclicCode dual(const CyclicCode& C);

/// Theorem check n = lcm(exp(C), exp(dual C)), applicable when gcd(g, h) = 1.
struct LcmCheck {
    bool applicable;
    bool holds; // meaningful only when applicable
};
LcmCheck exponent_lcm_check(const CyclicCode& C);

CyclicCode code_sum(const CyclicCode& a, const CyclicCode& b);
CyclicCode code_intersect(const CyclicCode& a, const CyclicCode& b);

/// Codeword a*g for an information polynomial with deg a < k.
Poly encode(const CyclicCode& C, const Poly& a);

/// Membership: deg c < n and g | c.
bool contains(const CyclicCode& C, const Poly& c);

/// All q^k codewords, in lexicographic order of the information polynomial's
/// coefficient vector (c_0 least significant).
std::vector<Poly> codewords(const CyclicCode& C, const Budget& budget = {});

/// B_t = number of nonzero codewords of order t; the zero codeword belongs to
/// no class. Orders above n land in the overflow bucket rather than being
/// truncated away.
struct ExponentDistribution {
    std::map<std::uint64_t, std::uint64_t> counts; // every occurring order
    std::uint64_t code_size;                       // q^k
    std::vector<std::uint64_t> in_range;           // B_1 .. B_n
    std::uint64_t overflow;                        // codewords with order > n

    std::map<std::uint64_t, std::uint64_t> overflow_orders() const;
};

ExponentDistribution exponent_distribution(const CyclicCode& C, const Budget& budget = {});

/// Orders of the basis polynomials g, xg, ..., x^{k-1}g, which all coincide.
struct BasisOrders {
    std::uint64_t order;
    std::uint32_t basis_size;
};
BasisOrders basis_orders(const CyclicCode& C);

/// One code per monic divisor of x^n - 1, in canonical generator order.
std::vector<CyclicCode> enumerate_codes(std::uint32_t n, const Field& F,
                                        const Budget& budget = {});

} // namespace cyclex

#endif
