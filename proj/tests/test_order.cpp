#include <doctest.h>

#include <numeric>

#include "cyclex/factor.hpp"
#include "cyclex/oracle.hpp"
#include "cyclex/textio.hpp"

using namespace cyclex;

namespace {

Poly P(const Field& F, const char* s) { return parse_poly(F, s); }

std::vector<Poly> all_monic(const Field& F, std::uint32_t d) {
    std::vector<Poly> out;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= F.q();
    for (std::uint64_t enc = 0; enc < count; ++enc) {
        std::vector<Elem> c(d + 1, 0);
        std::uint64_t t = enc;
        for (std::uint32_t i = 0; i < d; ++i) {
            c[i] = (Elem)(t % F.q());
            t /= F.q();
        }
        c[d] = 1;
        out.push_back(Poly::from_coeffs(F, std::move(c)));
    }
    return out;
}

} // namespace

TEST_CASE("order of the worked examples") {
    Field F2 = Field::make(2, 1);
    CHECK(order(P(F2, "1+x^2")) == 2);
    CHECK(order(P(F2, "1+x")) == 1);
    CHECK(order(P(F2, "x+x^2")) == 1);
    CHECK(order(P(F2, "1+x+x^2")) == 3);

    Field F3 = Field::make(3, 1);
    CHECK(order(P(F3, "1+x+x^2")) == 3);
    CHECK(order(P(F3, "2+2x+2x^2")) == 3);
}

TEST_CASE("order conventions and errors") {
    Field F2 = Field::make(2, 1);
    CHECK(order(Poly::one(F2)) == 1);
    CHECK(order(P(F2, "x^3")) == 1); // strips to a unit
    CHECK_THROWS_AS(order(Poly::zero(F2)), Error);
    Field F3 = Field::make(3, 1);
    CHECK(order(Poly::constant(F3, 2)) == 1);
}

TEST_CASE("structured order equals the naive oracle, exhaustive small") {
    // degree <= 4 here; the wider ranges run in the acceptance suite
    for (const Field& F : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2),
                           Field::make(5, 1)}) {
        for (std::uint32_t d = 1; d <= 4; ++d) {
            for (const Poly& f : all_monic(F, d)) {
                CAPTURE(F.q());
                CAPTURE(format_poly(f));
                CHECK(order(f) == oracle::order_naive(f));
            }
        }
    }
}

TEST_CASE("order is invariant under reciprocal") {
    for (const Field& F : {Field::make(2, 1), Field::make(3, 1)}) {
        for (std::uint32_t d = 1; d <= 5; ++d) {
            for (const Poly& f : all_monic(F, d)) {
                if (f.constant_term() == 0) continue;
                CHECK(order(f) == order(reciprocal(f)));
            }
        }
    }
}

TEST_CASE("order of a coprime product is the lcm") {
    Field F2 = Field::make(2, 1);
    auto irr = irreducibles_up_to(F2, 4);
    for (std::size_t i = 0; i < irr.size(); ++i) {
        for (std::size_t j = i + 1; j < irr.size(); ++j) {
            if (irr[i].constant_term() == 0 || irr[j].constant_term() == 0) continue;
            CHECK(order(irr[i] * irr[j]) == std::lcm(order(irr[i]), order(irr[j])));
        }
    }
}

TEST_CASE("order_divides_iff matches direct division") {
    Field F2 = Field::make(2, 1);
    CHECK(order_divides_iff(P(F2, "1+x+x^2"), 6));
    CHECK_FALSE(order_divides_iff(P(F2, "1+x+x^2"), 4));
    CHECK(order_divides_iff(P(F2, "1+x+x^2"), order(P(F2, "1+x+x^2"))));
    CHECK_THROWS_AS(order_divides_iff(P(F2, "x+x^2"), 3), Error);

    for (std::uint32_t d = 1; d <= 4; ++d) {
        for (const Poly& f : all_monic(F2, d)) {
            if (f.constant_term() == 0) continue;
            for (std::uint64_t r = 1; r <= 30; ++r) {
                bool direct = divmod(x_pow_minus_one(F2, r), f).second.is_zero();
                CHECK(order_divides_iff(f, r) == direct);
            }
        }
    }
}

TEST_CASE("int_factor") {
    CHECK(int_factor(1).empty());
    auto f63 = int_factor(63);
    REQUIRE(f63.size() == 2);
    CHECK(f63[0] == std::pair<std::uint64_t, int>{3, 2});
    CHECK(f63[1] == std::pair<std::uint64_t, int>{7, 1});
    for (std::uint64_t n = 1; n <= 500; ++n) {
        std::uint64_t prod = 1;
        for (auto [p, mult] : int_factor(n))
            for (int i = 0; i < mult; ++i) prod *= p;
        CHECK(prod == n);
    }
}

TEST_CASE("naive order cap behavior") {
    Field F2 = Field::make(2, 1);
    CHECK_THROWS_AS(oracle::order_naive(P(F2, "1+x+x^2"), 2), Error);
    try {
        oracle::order_naive(P(F2, "1+x+x^2"), 2);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CapExceeded);
    }
    CHECK(oracle::order_naive(P(F2, "1+x+x^2"), 3) == 3);
    CHECK(oracle::order_naive(Poly::one(F2)) == 1);
}
