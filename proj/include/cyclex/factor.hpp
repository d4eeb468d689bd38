#ifndef CYCLEX_FACTOR_HPP
#define CYCLEX_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclex/poly.hpp"

namespace cyclex {

inline constexpr std::uint64_t kDefaultSieveBudget = 10'000'000;

/// unit * prod factor^multiplicity = the factored polynomial.
/// Factors are monic irreducible, pairwise distinct, in canonical
/// (degree, encoding) order.
struct Factorization {
    Elem unit;
    std::vector<std::pair<Poly, int>> factors;

    Poly product(const Field& F) const;
};

/// All monic irreducibles of degree 1..dmax over F in canonical order, via a
/// trial-division sieve cached inside the Field. `budget` caps the total
/// number of candidate polynomials ever scanned for this field.
std::vector<Poly> irreducibles_up_to(const Field& F, std::uint32_t dmax,
                                     std::uint64_t budget = kDefaultSieveBudget);

Factorization factor(const Poly& f, std::uint64_t sieve_budget = kDefaultSieveBudget);

/// Trial-division prime factorization of n >= 1; 1 gives the empty list.
std::vector<std::pair<std::uint64_t, int>> int_factor(std::uint64_t n);

/// Order (period) of f: least e >= 1 with g | x^e - 1 where f = x^l * g.
/// Nonzero constants have order 1. Computed structurally from the
/// factorization of g; see oracle::order_naive for the independent check.
std::uint64_t order(const Poly& f);

/// Whether f | x^r - 1, decided as r mod order(f) == 0. Requires f(0) != 0.
bool order_divides_iff(const Poly& f, std::uint64_t r);

/// Order of a polynomial given its irreducible factors with multiplicities:
/// lcm of the irreducible orders (skipping x) times the characteristic lift
/// for the largest multiplicity. Lets callers with a known partial
/// factorization (e.g. codewords a*g) avoid refactoring from scratch.
std::uint64_t order_from_factors(const Field& F,
                                 const std::vector<std::pair<Poly, int>>& factors);

// Overflow-checked helpers used by the order machinery.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// base^e mod modp, by squaring.
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& modp);

} // namespace cyclex

#endif
