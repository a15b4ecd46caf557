#include "doctest.h"

#include <random>

#include "nilpath/charpoly.hpp"
#include "nilpath/pathwalks.hpp"
#include "oracles.hpp"

using namespace nilpath;

namespace {

GF2Poly random_poly(std::mt19937_64& rng) {
    GF2Poly p;
    const std::size_t terms = rng() % 12;
    for (std::size_t t = 0; t < terms; ++t) p = poly_add(p, GF2Poly::monomial(rng() % 200));
    return p;
}

}  // namespace

TEST_CASE("GF2Poly basics") {
    CHECK(GF2Poly{}.is_zero());
    CHECK_FALSE(GF2Poly{}.degree().has_value());
    CHECK(GF2Poly::monomial(130).degree() == 130u);
    CHECK(GF2Poly::from_exponents({3, 3}).is_zero());
    CHECK(GF2Poly::from_exponents({7, 1, 0}).to_string() == "x^7 + x + 1");
    CHECK(GF2Poly{}.to_string() == "0");
}

TEST_CASE("poly_add") {
    const GF2Poly p = GF2Poly::from_exponents({5, 2, 0});
    CHECK(poly_add(p, p).is_zero());
    CHECK(poly_add(GF2Poly::from_exponents({2, 0}), GF2Poly::one()) == GF2Poly::monomial(2));
    CHECK(poly_add(GF2Poly::monomial(3), GF2Poly::monomial(1)) ==
          GF2Poly::from_exponents({3, 1}));
    // Cancelling the leading word leaves normalized storage.
    const GF2Poly big = GF2Poly::from_exponents({100, 1});
    CHECK(poly_add(big, GF2Poly::monomial(100)) == GF2Poly::monomial(1));
}

TEST_CASE("poly_shift_mul") {
    CHECK(poly_shift_mul(GF2Poly::one()) == GF2Poly::monomial(1));
    CHECK(poly_shift_mul(GF2Poly::from_exponents({2, 0})) == GF2Poly::from_exponents({3, 1}));
    CHECK(poly_shift_mul(GF2Poly{}).is_zero());
    CHECK(poly_shift_mul(GF2Poly::monomial(63)) == GF2Poly::monomial(64));
}

TEST_CASE("poly_add is associative, commutative and self-inverse") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(poly_add(poly_add(p, q), r) == poly_add(p, poly_add(q, r)));
        CHECK(poly_add(p, q) == poly_add(q, p));
        CHECK(poly_add(poly_add(p, q), q) == p);
    }
}

TEST_CASE("charpoly_path examples") {
    CHECK(charpoly_path(0) == GF2Poly::one());
    CHECK(charpoly_path(1) == GF2Poly::monomial(1));
    CHECK(charpoly_path(2) == GF2Poly::from_exponents({2, 0}));
    CHECK(charpoly_path(7) == GF2Poly::monomial(7));
}

TEST_CASE("charpoly_path matches the symbolic determinant, n <= 10") {
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto integer = oracle::path_charpoly_integer(n);
        CHECK(integer.size() == n + 1);
        CHECK(integer.back() == 1);
        const GF2Poly p = charpoly_path(n);
        for (std::size_t d = 0; d < integer.size(); ++d) {
            const bool odd = (integer[d] % 2) != 0;
            CHECK_MESSAGE(p.coefficient(d) == odd, "n = " << n << ", degree " << d);
        }
    }
}

TEST_CASE("charpoly degree law") {
    for (std::size_t n = 0; n <= 300; ++n) {
        const GF2Poly p = charpoly_path(n);
        REQUIRE(p.degree().has_value());
        CHECK(*p.degree() == n);
        CHECK(p.coefficient(n));
    }
}

TEST_CASE("charpoly_is_monomial") {
    CHECK(charpoly_is_monomial(7));
    CHECK_FALSE(charpoly_is_monomial(2));
    CHECK(charpoly_is_monomial(15));
}

TEST_CASE("monomial characteristic polynomial iff nilpotent, n <= 256") {
    for (std::size_t n = 1; n <= 256; ++n) {
        CHECK_MESSAGE(charpoly_is_monomial(n) == nilpotency_index(path_adjacency(n)).has_value(),
                      "n = " << n);
    }
}
