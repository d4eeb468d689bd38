#ifndef CYCLEX_POLY_HPP
#define CYCLEX_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclex/field.hpp"

namespace cyclex {

/// Dense univariate polynomial over GF(q), canonical form: no trailing zero
/// coefficients stored, empty coefficient vector = zero polynomial. The
/// degree of the zero polynomial is deliberately not representable as an
/// integer; callers branch on is_zero() first.
class Poly {
public:
    explicit Poly(const Field& f) : field_(f) {}

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const Field& f, Elem c);
    static Poly one(const Field& f) { return constant(f, 1); }
    static Poly x(const Field& f) { return monomial(f, 1); }
    static Poly monomial(const Field& f, std::size_t deg, Elem c = 1);
    static Poly from_coeffs(const Field& f, std::vector<Elem> coeffs);

    const Field& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Degree of a nonzero polynomial; throws ZeroPolynomial on zero.
    int degree() const;

    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Elem lead() const;
    Elem constant_term() const { return coeff(0); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    Elem eval(Elem at) const;

    Poly monic() const;
    Poly scaled(Elem c) const;

    bool operator==(const Poly& o) const {
        return field_ == o.field_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    Field field_;
    std::vector<Elem> coeffs_;

    void canonicalize();
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);

/// f = q*d + r with deg r < deg d; throws DivisionByZero on d = 0.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& d);

bool divides(const Poly& d, const Poly& f);

/// Monic gcd by Euclid; gcd(f, 0) = monic(f); throws BothZero.
Poly gcd(const Poly& f, const Poly& g);

/// x^deg(f) * f(1/x): coefficient reversal. Throws ZeroPolynomial.
Poly reciprocal(const Poly& f);

/// f = x^l * g with g(0) != 0.
struct XPowerSplit {
    std::uint32_t l;
    Poly g;
};
XPowerSplit strip_x_power(const Poly& f);

Poly x_pow_minus_one(const Field& f, std::uint64_t e);

/// Canonical order: zero first, then by (degree, base-q integer encoding of
/// the coefficient vector). Returns <0, 0, >0.
int compare(const Poly& a, const Poly& b);

} // namespace cyclex

#endif
