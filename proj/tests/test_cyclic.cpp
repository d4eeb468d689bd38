#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cyclex/code.hpp"
#include "cyclex/oracle.hpp"
#include "cyclex/textio.hpp"

using namespace cyclex;

namespace {

Poly P(const Field& F, const char* s) { return parse_poly(F, s); }

std::vector<Elem> to_vector(const Poly& c, std::uint32_t n) {
    std::vector<Elem> v(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) v[i] = c.coeff(i);
    return v;
}

Elem dot(const Field& F, const std::vector<Elem>& a, const std::vector<Elem>& b) {
    Elem acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], b[i]));
    return acc;
}

} // namespace

TEST_CASE("code construction from a generator") {
    Field F2 = Field::make(2, 1);
    CyclicCode C = CyclicCode::make(3, F2, P(F2, "1+x"));
    CHECK(C.g() == P(F2, "1+x"));
    CHECK(C.k() == 2);
    CHECK(C.h() == P(F2, "1+x+x^2"));

    Field F3 = Field::make(3, 1);
    CyclicCode C2 = CyclicCode::make(3, F3, P(F3, "1+x+x^2"));
    CHECK(C2.g() == P(F3, "1+x+x^2"));
    CHECK(C2.k() == 1);

    // non-divisor generators canonicalize via gcd with x^n - 1
    CyclicCode C3 = CyclicCode::make(4, F2, P(F2, "1+x^3"));
    CHECK(C3.g() == P(F2, "1+x"));
    CHECK(C3.k() == 3);

    CHECK_THROWS_AS(CyclicCode::make(3, F2, Poly::zero(F2)), Error);
    CyclicCode Z = CyclicCode::zero_code(4, F2);
    CHECK(Z.g() == x_pow_minus_one(F2, 4));
    CHECK(Z.k() == 0);
    CHECK(Z.h().is_one());
}

TEST_CASE("exponent of worked examples") {
    Field F2 = Field::make(2, 1);
    CHECK(exponent(CyclicCode::make(3, F2, P(F2, "1+x"))) == 1);
    Field F3 = Field::make(3, 1);
    CHECK(exponent(CyclicCode::make(3, F3, P(F3, "1+x+x^2"))) == 3);
    CHECK(exponent(CyclicCode::zero_code(4, F2)) == 4);
    CHECK(exponent(CyclicCode::full_code(5, F2)) == 1);
}

TEST_CASE("dual code") {
    Field F2 = Field::make(2, 1);
    CyclicCode C = CyclicCode::make(3, F2, P(F2, "1+x"));
    CyclicCode D = dual(C);
    CHECK(D.g() == P(F2, "1+x+x^2"));
    CHECK(D.k() == 1);
    CHECK(dual(D) == C);

    CyclicCode full = CyclicCode::full_code(4, F2);
    CHECK(dual(full).k() == 0);
    CHECK(dual(full).g() == x_pow_minus_one(F2, 4));

    Field F3 = Field::make(3, 1);
    CyclicCode C3 = CyclicCode::make(3, F3, P(F3, "1+x+x^2"));
    CyclicCode D3 = dual(C3);
    CHECK(D3.g() == P(F3, "2+x"));
    CHECK(D3.k() == 2);

    // every dual codeword is orthogonal to every codeword
    for (const Poly& c : codewords(C3)) {
        for (const Poly& d : codewords(D3)) {
            CHECK(dot(F3, to_vector(c, 3), to_vector(d, 3)) == 0);
        }
    }
}

TEST_CASE("dual orthogonality across enumerated codes") {
    for (const Field& F : {Field::make(2, 1), Field::make(3, 1)}) {
        for (std::uint32_t n = 1; n <= 6; ++n) {
            for (const CyclicCode& C : enumerate_codes(n, F)) {
                CyclicCode D = dual(C);
                CHECK(D.k() == n - C.k());
                CHECK(dual(D) == C);
                for (const Poly& c : codewords(C))
                    for (const Poly& d : codewords(D))
                        CHECK(dot(F, to_vector(c, n), to_vector(d, n)) == 0);
            }
        }
    }
}

TEST_CASE("exponent lcm relation with the dual") {
    Field F2 = Field::make(2, 1);
    auto r1 = exponent_lcm_check(CyclicCode::make(3, F2, P(F2, "1+x")));
    CHECK(r1.applicable);
    CHECK(r1.holds);

    auto r2 = exponent_lcm_check(CyclicCode::make(4, F2, P(F2, "1+x")));
    CHECK_FALSE(r2.applicable); // g = 1+x, h = (1+x)^3 share a factor

    auto r3 = exponent_lcm_check(CyclicCode::zero_code(3, F2));
    CHECK(r3.applicable);
    CHECK(r3.holds);
}

TEST_CASE("sum and intersection of codes") {
    Field F2 = Field::make(2, 1);
    CyclicCode A = CyclicCode::make(3, F2, P(F2, "1+x"));
    CyclicCode B = CyclicCode::make(3, F2, P(F2, "1+x+x^2"));
    CyclicCode S = code_sum(A, B);
    CHECK(S.g().is_one());
    CHECK(exponent(S) == std::gcd(exponent(A), exponent(B)));

    CHECK(code_sum(A, A) == A);
    CHECK(code_sum(A, CyclicCode::zero_code(3, F2)) == A);

    CyclicCode I = code_intersect(A, B);
    CHECK(I.g() == x_pow_minus_one(F2, 3));
    CHECK(code_intersect(A, A) == A);
    CHECK(code_intersect(A, CyclicCode::full_code(3, F2)) == A);

    CHECK_THROWS_AS(code_sum(A, CyclicCode::make(4, F2, P(F2, "1+x"))), Error);
}

TEST_CASE("encode and membership") {
    Field F2 = Field::make(2, 1);
    CyclicCode C = CyclicCode::make(3, F2, P(F2, "1+x"));
    CHECK(encode(C, P(F2, "1+x")) == P(F2, "1+x^2"));
    CHECK(encode(C, Poly::zero(F2)).is_zero());
    CHECK(encode(C, Poly::one(F2)) == C.g());
    CHECK_THROWS_AS(encode(C, P(F2, "1+x^2")), Error); // degree >= k

    CHECK(contains(C, P(F2, "1+x^2")));
    CHECK_FALSE(contains(C, Poly::one(F2)));
    CHECK(contains(C, Poly::zero(F2)));
    CHECK_THROWS_AS(contains(C, P(F2, "1+x^3")), Error); // degree >= n
}

TEST_CASE("codeword enumeration matches the worked examples") {
    Field F2 = Field::make(2, 1);
    CyclicCode C = CyclicCode::make(3, F2, P(F2, "1+x"));
    auto words = codewords(C);
    std::set<std::vector<Elem>> got;
    for (const Poly& c : words) got.insert(to_vector(c, 3));
    std::set<std::vector<Elem>> want = {{0, 0, 0}, {1, 0, 1}, {1, 1, 0}, {0, 1, 1}};
    CHECK(got == want);
    CHECK(words.size() == 4); // no duplicates

    Field F3 = Field::make(3, 1);
    CyclicCode C3 = CyclicCode::make(3, F3, P(F3, "1+x+x^2"));
    std::set<std::vector<Elem>> got3;
    for (const Poly& c : codewords(C3)) got3.insert(to_vector(c, 3));
    CHECK(got3 == std::set<std::vector<Elem>>{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});

    auto zero_words = codewords(CyclicCode::zero_code(3, F2));
    REQUIRE(zero_words.size() == 1);
    CHECK(zero_words[0].is_zero());

    Budget tiny;
    tiny.codewords = 2;
    CHECK_THROWS_AS(codewords(C, tiny), Error);
}

TEST_CASE("every codeword is a member and the code is shift-closed") {
    for (const Field& F : {Field::make(2, 1), Field::make(3, 1)}) {
        for (std::uint32_t n = 1; n <= 6; ++n) {
            for (const CyclicCode& C : enumerate_codes(n, F)) {
                if (checked_pow(F.q(), C.k()) > 1000) continue;
                auto words = codewords(C);
                std::set<std::vector<Elem>> all;
                for (const Poly& c : words) {
                    CHECK(contains(C, c));
                    auto v = to_vector(c, n);
                    all.insert(v);
                }
                CHECK(all.size() == words.size());
                for (const auto& v : all) {
                    std::vector<Elem> rot(v.size());
                    for (std::size_t i = 0; i < v.size(); ++i) rot[(i + 1) % n] = v[i];
                    CHECK(all.count(rot) == 1);
                }
            }
        }
    }
}

TEST_CASE("exponent distribution of the worked examples") {
    Field F2 = Field::make(2, 1);
    auto d1 = exponent_distribution(CyclicCode::make(3, F2, P(F2, "1+x")));
    CHECK(d1.in_range == std::vector<std::uint64_t>{2, 1, 0});
    CHECK(d1.overflow == 0);
    CHECK(d1.code_size == 4);

    Field F3 = Field::make(3, 1);
    auto d2 = exponent_distribution(CyclicCode::make(3, F3, P(F3, "1+x+x^2")));
    CHECK(d2.in_range == std::vector<std::uint64_t>{0, 0, 2});

    // the full code of length 3 has 7 nonzero codewords: five of order 1
    // (1, x, x^2, 1+x, x+x^2), one of order 2, one of order 3
    auto d3 = exponent_distribution(CyclicCode::full_code(3, F2));
    CHECK(d3.in_range == std::vector<std::uint64_t>{5, 1, 1});
    std::uint64_t total = 0;
    for (auto [t, b] : d3.counts) total += b;
    CHECK(total == 7);
}

TEST_CASE("orders above n land in the overflow bucket") {
    Field F2 = Field::make(2, 1);
    CyclicCode C = CyclicCode::make(5, F2, P(F2, "1+x"));
    Poly witness = P(F2, "1+x+x^2+x^4");
    CHECK(contains(C, witness));
    CHECK(order(witness) == 7);
    auto dist = exponent_distribution(C);
    CHECK(dist.overflow > 0);
    CHECK(dist.overflow_orders().count(7) == 1);
    std::uint64_t total = dist.overflow;
    for (auto b : dist.in_range) total += b;
    CHECK(total == dist.code_size - 1);
}

TEST_CASE("basis orders") {
    Field F2 = Field::make(2, 1);
    auto b1 = basis_orders(CyclicCode::make(3, F2, P(F2, "1+x")));
    CHECK(b1.order == 1);
    CHECK(b1.basis_size == 2);

    Field F3 = Field::make(3, 1);
    auto b2 = basis_orders(CyclicCode::make(3, F3, P(F3, "1+x+x^2")));
    CHECK(b2.order == 3);
    CHECK(b2.basis_size == 1);

    auto b3 = basis_orders(CyclicCode::full_code(3, F2));
    CHECK(b3.order == 1);
    CHECK(b3.basis_size == 3);

    CHECK_THROWS_AS(basis_orders(CyclicCode::zero_code(3, F2)), Error);
}

TEST_CASE("code enumeration") {
    Field F2 = Field::make(2, 1);
    auto codes3 = enumerate_codes(3, F2);
    REQUIRE(codes3.size() == 4);
    CHECK(codes3[0].g().is_one());
    CHECK(codes3[1].g() == P(F2, "1+x"));
    CHECK(codes3[2].g() == P(F2, "1+x+x^2"));
    CHECK(codes3[3].g() == x_pow_minus_one(F2, 3));

    auto codes4 = enumerate_codes(4, F2); // x^4 - 1 = (1+x)^4
    REQUIRE(codes4.size() == 5);
    for (std::uint32_t j = 0; j < 5; ++j) CHECK(codes4[j].k() == 4 - j);

    auto codes1 = enumerate_codes(1, Field::make(3, 1));
    CHECK(codes1.size() == 2);

    Budget tiny;
    tiny.divisors = 3;
    CHECK_THROWS_AS(enumerate_codes(4, F2, tiny), Error);
}

TEST_CASE("structural invariants over swept codes") {
    for (const Field& F : {Field::make(2, 1), Field::make(3, 1)}) {
        for (std::uint32_t n = 1; n <= 8; ++n) {
            for (const CyclicCode& C : enumerate_codes(n, F)) {
                CHECK(C.g() * C.h() == x_pow_minus_one(F, n));
                CHECK(C.h().constant_term() != 0);
                std::uint64_t e = exponent(C);
                CHECK(n % e == 0);
                CHECK(n - C.k() <= e);
                CHECK(e <= n);
                CHECK(exponent(dual(C)) == order(C.h()));
            }
        }
    }
}
