#include "cyclex/poly.hpp"

#include <algorithm>

namespace cyclex {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (a.field() != b.field())
        fail(Errc::FieldMismatch, "polynomials over different fields");
}

} // namespace

void Poly::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Field& f, Elem c) {
    Poly p(f);
    if (c != 0) p.coeffs_ = {c};
    return p;
}

Poly Poly::monomial(const Field& f, std::size_t deg, Elem c) {
    Poly p(f);
    if (c != 0) {
        p.coeffs_.assign(deg + 1, 0);
        p.coeffs_[deg] = c;
    }
    return p;
}

Poly Poly::from_coeffs(const Field& f, std::vector<Elem> coeffs) {
    Poly p(f);
    p.coeffs_ = std::move(coeffs);
    p.canonicalize();
    return p;
}

int Poly::degree() const {
    if (is_zero()) fail(Errc::ZeroPolynomial, "degree of the zero polynomial");
    return (int)coeffs_.size() - 1;
}

Elem Poly::lead() const {
    if (is_zero()) fail(Errc::ZeroPolynomial, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Elem Poly::eval(Elem at) const {
    Elem acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = field_.add(field_.mul(acc, at), coeffs_[i]);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) fail(Errc::ZeroPolynomial, "monic of the zero polynomial");
    if (coeffs_.back() == 1) return *this;
    return scaled(field_.inv(coeffs_.back()));
}

Poly Poly::scaled(Elem c) const {
    Poly r(field_);
    if (c == 0) return r;
    r.coeffs_.reserve(coeffs_.size());
    for (Elem a : coeffs_) r.coeffs_.push_back(field_.mul(a, c));
    r.canonicalize();
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& F = a.field();
    std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly::from_coeffs(F, std::move(c));
}

Poly operator-(const Poly& a) {
    const Field& F = a.field();
    std::vector<Elem> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.neg(a.coeff(i));
    return Poly::from_coeffs(F, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& F = a.field();
    if (a.is_zero() || b.is_zero()) return Poly::zero(F);
    std::vector<Elem> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        Elem ai = a.coeff(i);
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(ai, b.coeff(j)));
    }
    return Poly::from_coeffs(F, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& d) {
    require_same_field(f, d);
    const Field& F = f.field();
    if (d.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    if (f.is_zero() || f.coeffs().size() < d.coeffs().size())
        return {Poly::zero(F), f};
    Elem lead_inv = F.inv(d.lead());
    std::vector<Elem> rem = f.coeffs();
    std::vector<Elem> quot(rem.size() - d.coeffs().size() + 1, 0);
    std::size_t dd = d.coeffs().size() - 1;
    for (std::size_t i = rem.size(); i-- > dd;) {
        Elem c = F.mul(rem[i], lead_inv);
        if (c == 0) continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[i - dd + j] = F.sub(rem[i - dd + j], F.mul(c, d.coeff(j)));
    }
    return {Poly::from_coeffs(F, std::move(quot)), Poly::from_coeffs(F, std::move(rem))};
}

bool divides(const Poly& d, const Poly& f) { return divmod(f, d).second.is_zero(); }

Poly gcd(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (f.is_zero() && g.is_zero()) fail(Errc::BothZero, "gcd(0, 0) is undefined");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

Poly reciprocal(const Poly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "reciprocal of the zero polynomial");
    std::vector<Elem> c(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly::from_coeffs(f.field(), std::move(c));
}

XPowerSplit strip_x_power(const Poly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "x-power split of the zero polynomial");
    std::size_t l = 0;
    while (f.coeff(l) == 0) ++l;
    std::vector<Elem> c(f.coeffs().begin() + (std::ptrdiff_t)l, f.coeffs().end());
    return {(std::uint32_t)l, Poly::from_coeffs(f.field(), std::move(c))};
}

Poly x_pow_minus_one(const Field& F, std::uint64_t e) {
    std::vector<Elem> c(e + 1, 0);
    c[0] = F.neg(1);
    c[e] = F.add(c[e], 1); // e = 0 gives the zero polynomial x^0 - 1
    return Poly::from_coeffs(F, std::move(c));
}

int compare(const Poly& a, const Poly& b) {
    if (a.coeffs().size() != b.coeffs().size())
        return a.coeffs().size() < b.coeffs().size() ? -1 : 1;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i) ? -1 : 1;
    }
    return 0;
}

} // namespace cyclex
