#include "cyclex/field.hpp"

#include <algorithm>
#include <string>

namespace cyclex {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Arithmetic on coefficient vectors over GF(p), used only for the modulus
// search at construction time. Vectors are canonical (no trailing zeros).
using PVec = std::vector<Elem>;

void trim(PVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Remainder of a by b (b monic-ish: leading coefficient invertible mod p).
PVec prime_rem(PVec a, const PVec& b, std::uint64_t p) {
    // leading coefficient of b must be 1 here (we only divide by monics)
    while (a.size() >= b.size() && !a.empty()) {
        Elem c = a.back();
        if (c != 0) {
            std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t t = (std::uint64_t)b[j] * c % p;
                a[off + j] = (Elem)((a[off + j] + p - t) % p);
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() < b.size()) break;
    }
    trim(a);
    return a;
}

// Monic irreducibles over GF(p) of degree 1..dmax, by trial division against
// the lower-degree irreducibles already found, in (degree, encoding) order.
std::vector<PVec> prime_field_irreducibles(std::uint64_t p, std::uint32_t dmax) {
    std::vector<PVec> irr;
    for (std::uint32_t d = 1; d <= dmax; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            PVec cand(d + 1, 0);
            std::uint64_t t = enc;
            for (std::uint32_t i = 0; i < d; ++i) {
                cand[i] = (Elem)(t % p);
                t /= p;
            }
            cand[d] = 1;
            bool irreducible = true;
            for (const PVec& f : irr) {
                if (2 * (f.size() - 1) > d) break; // a factor of degree <= d/2 must exist
                if (prime_rem(cand, f, p).empty()) {
                    irreducible = false;
                    break;
                }
            }
            if (irreducible) irr.push_back(std::move(cand));
        }
    }
    return irr;
}

} // namespace

Field Field::make(std::uint64_t p, std::uint32_t m, std::uint64_t size_limit) {
    if (m < 1) fail(Errc::ParseError, "extension degree must be >= 1");
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (q > size_limit / p)
            fail(Errc::BudgetExceeded,
                 "field size " + std::to_string(p) + "^" + std::to_string(m) +
                     " exceeds budget " + std::to_string(size_limit));
        q *= p;
    }
    Field F;
    F.p_ = p;
    F.m_ = m;
    F.q_ = q;
    F.sieve_ = std::make_shared<SieveCache>();
    if (m == 1) {
        F.modulus_ = {0, 1}; // placeholder x, never consulted
        return F;
    }
    // first monic irreducible of degree m in encoding order; reducibility is
    // witnessed by a factor of degree <= m/2
    auto irr = prime_field_irreducibles(p, m / 2);
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
        PVec cand(m + 1, 0);
        std::uint64_t t = enc;
        for (std::uint32_t i = 0; i < m; ++i) {
            cand[i] = (Elem)(t % p);
            t /= p;
        }
        cand[m] = 1;
        bool irreducible = true;
        for (const PVec& f : irr) {
            if (prime_rem(cand, f, p).empty()) {
                irreducible = false;
                break;
            }
        }
        if (irreducible) {
            F.modulus_ = cand;
            return F;
        }
    }
    fail(Errc::Overflow, "no irreducible of requested degree (unreachable)");
}

std::vector<Elem> Field::digits(Elem a) const {
    std::vector<Elem> d(m_, 0);
    std::uint64_t t = a;
    for (std::uint32_t i = 0; i < m_; ++i) {
        d[i] = (Elem)(t % p_);
        t /= p_;
    }
    return d;
}

Elem Field::from_digits(const std::vector<Elem>& d) const {
    std::uint64_t rep = 0;
    for (std::size_t i = d.size(); i-- > 0;) rep = rep * p_ + d[i];
    return (Elem)rep;
}

Elem Field::add(Elem a, Elem b) const {
    if (m_ == 1) return (Elem)(((std::uint64_t)a + b) % p_);
    std::uint64_t rep = 0, pw = 1;
    std::uint64_t ta = a, tb = b;
    for (std::uint32_t i = 0; i < m_; ++i) {
        rep += (ta % p_ + tb % p_) % p_ * pw;
        ta /= p_;
        tb /= p_;
        pw *= p_;
    }
    return (Elem)rep;
}

Elem Field::neg(Elem a) const {
    if (m_ == 1) return (Elem)((p_ - a) % p_);
    std::uint64_t rep = 0, pw = 1;
    std::uint64_t ta = a;
    for (std::uint32_t i = 0; i < m_; ++i) {
        rep += (p_ - ta % p_) % p_ * pw;
        ta /= p_;
        pw *= p_;
    }
    return (Elem)rep;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (m_ == 1) return (Elem)((std::uint64_t)a * b % p_);
    if (a == 0 || b == 0) return 0;
    std::vector<Elem> da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + (std::uint64_t)da[i] * db[j]) % p_;
    }
    // reduce by the monic modulus, high degree down
    for (std::size_t i = prod.size(); i-- > m_;) {
        std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        std::size_t off = i - m_;
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[off + j] = (prod[off + j] + (p_ - (std::uint64_t)modulus_[j] * c % p_)) % p_;
    }
    std::vector<Elem> d(m_);
    for (std::uint32_t i = 0; i < m_; ++i) d[i] = (Elem)prod[i];
    return from_digits(d);
}

Elem Field::pow(Elem a, std::uint64_t k) const {
    Elem r = 1, base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero field element");
    return pow(a, q_ - 2);
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(q_);
    for (std::uint64_t i = 0; i < q_; ++i) out[i] = (Elem)i;
    return out;
}

} // namespace cyclex
