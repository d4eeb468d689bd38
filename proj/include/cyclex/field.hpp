#ifndef CYCLEX_FIELD_HPP
#define CYCLEX_FIELD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "cyclex/error.hpp"

namespace cyclex {

/// Field element, encoded as a base-p integer: digit i is the coefficient of
/// x^i in the polynomial-basis representative. rep 0 is the additive and
/// rep 1 the multiplicative identity.
using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultFieldSizeLimit = std::uint64_t{1} << 20;

/// GF(p^m) with a deterministic canonical modulus: the first monic
/// irreducible of degree m in ascending order of the base-p integer encoding
/// of (c_0, ..., c_{m-1}). Immutable after construction; all operations are
/// pure and thread-safe.
class Field {
public:
    static Field make(std::uint64_t p, std::uint32_t m,
                      std::uint64_t size_limit = kDefaultFieldSizeLimit);

    std::uint64_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint64_t q() const { return q_; }

    /// Modulus coefficients over GF(p), index i = coefficient of x^i, monic of
    /// degree m. For m = 1 this is the placeholder x, never consulted.
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t k) const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    /// All q elements in encoding order 0, 1, ..., q-1.
    std::vector<Elem> elements() const;

    std::vector<Elem> digits(Elem a) const;
    Elem from_digits(const std::vector<Elem>& d) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    /// Lazily grown sieve of monic irreducibles over this field, shared
    /// between copies of the same Field value (see irreducibles_up_to).
    struct SieveCache {
        std::mutex mu;
        std::vector<std::vector<Elem>> coeffs; // ordered by (degree, encoding)
        std::uint32_t complete_degree = 0;
        std::uint64_t candidates_scanned = 0;
        std::map<std::vector<Elem>, std::uint64_t> irreducible_orders;
    };
    const std::shared_ptr<SieveCache>& sieve_cache() const { return sieve_; }

private:
    Field() = default;
    std::uint64_t p_ = 0, q_ = 0;
    std::uint32_t m_ = 0;
    std::vector<Elem> modulus_;
    std::shared_ptr<SieveCache> sieve_;
};

} // namespace cyclex

#endif
