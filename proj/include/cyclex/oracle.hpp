#ifndef CYCLEX_ORACLE_HPP
#define CYCLEX_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cyclex/code.hpp"

namespace cyclex::oracle {

/// Brute-force order: after stripping x-powers, try e = 1, 2, ... by direct
/// division remainder. Shares no nontrivial path with the structured order
/// (no factorization), so agreement is evidence. Throws CapExceeded instead
/// of reporting a number it could not confirm.
std::uint64_t order_naive(const Poly& f, std::uint64_t cap);

/// Same, with the cap derived from the worst theoretical order
/// (q^deg - 1 times the characteristic lift).
std::uint64_t order_naive(const Poly& f);

/// Smallest e in 1..n with g | x^e - 1, by direct scan; total since e = n works.
std::uint64_t exponent_naive(const CyclicCode& C);

/// Distribution via codeword enumeration + order_naive.
ExponentDistribution distribution_naive(const CyclicCode& C, const Budget& budget = {});

/// All monic divisors of x^n - 1 found by exhaustively scanning every monic
/// polynomial of degree 0..n. Cross-checks enumerate_codes.
std::vector<Poly> divisors_naive(std::uint32_t n, const Field& F,
                                 std::uint64_t scan_budget = 10'000'000);

enum class Theorem {
    EDividesN,
    EBounds,
    DualLcm,
    SumGcd,
    OrdRecip,
    GcdCyclotomic,
    BasisOrder,
    BEGeK,
    DistTotal,
};

const char* theorem_name(Theorem t);

struct Failure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    Theorem theorem;
    std::uint64_t cases_checked = 0;
    std::uint64_t skipped = 0; // budget overruns, never failures
    std::vector<Failure> failures;

    bool pass() const { return failures.empty(); }
};

/// Sweeps every theorem over all cyclic codes of length n <= n_max over F
/// (pairs capped at n <= 8 for the sum theorem), checking the structured
/// implementations against each other and against the naive paths.
std::vector<VerifyReport> run_verification(const Field& F, std::uint32_t n_max,
                                           const Budget& budget = {});

} // namespace cyclex::oracle

#endif
