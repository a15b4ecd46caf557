#include "doctest.h"

#include <cstdlib>
#include <random>

#include "nilpath/gf2_matrix.hpp"
#include "nilpath/pathwalks.hpp"
#include "oracles.hpp"

using namespace nilpath;

namespace {

GF2Matrix adjacency(std::size_t n) {
    return mat_from_entries(n, [](std::size_t i, std::size_t j) {
        return (i > j ? i - j : j - i) == 1;
    });
}

bool trailing_bits_clear(const GF2Matrix& m) {
    const std::size_t used = m.dimension() % GF2Matrix::word_bits;
    if (used == 0) return true;
    const GF2Matrix::Word mask = ~((GF2Matrix::Word{1} << used) - 1);
    for (std::size_t i = 1; i <= m.dimension(); ++i) {
        if (m.row(i).back() & mask) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("mat_from_entries") {
    const GF2Matrix one = mat_from_entries(1, [](std::size_t, std::size_t) { return false; });
    CHECK(one.dimension() == 1);
    CHECK(mat_is_zero(one));

    const GF2Matrix a2 = adjacency(2);
    CHECK_FALSE(a2.get(1, 1));
    CHECK(a2.get(1, 2));
    CHECK(a2.get(2, 1));
    CHECK_FALSE(a2.get(2, 2));

    // The 7x7 path adjacency matrix, row by row.
    const GF2Matrix a7 = adjacency(7);
    CHECK(a7.to_string() ==
          "0100000\n"
          "1010000\n"
          "0101000\n"
          "0010100\n"
          "0001010\n"
          "0000101\n"
          "0000010\n");

    CHECK_THROWS_AS(mat_from_entries(0, [](std::size_t, std::size_t) { return true; }),
                    std::invalid_argument);
    CHECK_THROWS_AS(a7.get(0, 1), std::out_of_range);
    CHECK_THROWS_AS(a7.get(1, 8), std::out_of_range);
}

TEST_CASE("mat_mul examples") {
    CHECK(mat_mul(GF2Matrix::identity(7), adjacency(7)) == adjacency(7));
    CHECK(mat_mul(adjacency(2), adjacency(2)) == GF2Matrix::identity(2));

    GF2Matrix acc = GF2Matrix::identity(7);
    for (int t = 0; t < 7; ++t) acc = mat_mul(acc, adjacency(7));
    CHECK(mat_is_zero(acc));

    CHECK_THROWS_AS(mat_mul(GF2Matrix(3), GF2Matrix(4)), std::invalid_argument);
}

TEST_CASE("mat_mul agrees with the bit-by-bit product") {
    std::mt19937_64 rng(0x5eed);
    for (std::size_t n : {1, 2, 5, 31, 63, 64, 65}) {
        for (double density : {0.1, 0.5, 0.9}) {
            const auto a = oracle::random_matrix(n, rng, density);
            const auto b = oracle::random_matrix(n, rng, density);
            const auto fast = mat_mul(a, b);
            CHECK(fast == oracle::naive_mul(a, b));
            CHECK(trailing_bits_clear(fast));
        }
    }
}

TEST_CASE("mat_pow examples") {
    CHECK(mat_pow(adjacency(5), 0) == GF2Matrix::identity(5));
    CHECK(mat_pow(GF2Matrix(3), 0) == GF2Matrix::identity(3));
    CHECK(mat_is_zero(mat_pow(adjacency(7), 7)));
    CHECK(mat_pow(adjacency(7), 6).get(1, 7));
}

TEST_CASE("mat_is_zero") {
    for (std::size_t n : {1, 7, 64, 100}) CHECK(mat_is_zero(GF2Matrix::zero(n)));
    CHECK_FALSE(mat_is_zero(adjacency(7)));
    CHECK(mat_is_zero(mat_pow(adjacency(15), 15)));
    GF2Matrix corner(130);
    corner.set(130, 130, true);
    CHECK_FALSE(mat_is_zero(corner));
}

TEST_CASE("nilpotency_index examples") {
    CHECK(nilpotency_index(adjacency(1)) == 1u);
    CHECK(nilpotency_index(adjacency(7)) == 7u);
    CHECK_FALSE(nilpotency_index(adjacency(2)).has_value());
    CHECK_FALSE(nilpotency_index(GF2Matrix::identity(4)).has_value());
    CHECK(nilpotency_index(GF2Matrix::zero(9)) == 1u);
}

TEST_CASE("nilpotency_index matches a linear scan") {
    // Strictly upper triangular matrices are nilpotent with varied indices.
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 40;
        const double density = 0.05 + 0.9 * (trial % 10) / 10.0;
        std::bernoulli_distribution bit(density);
        GF2Matrix a(n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) a.set(i, j, bit(rng));

        std::uint64_t scan = 1;
        GF2Matrix p = a;
        while (!mat_is_zero(p)) {
            p = oracle::naive_mul(p, a);
            ++scan;
        }
        CHECK(nilpotency_index(a) == scan);

        // Adding the identity makes it invertible.
        GF2Matrix b = a;
        for (std::size_t i = 1; i <= n; ++i) b.set(i, i, true);
        CHECK_FALSE(nilpotency_index(b).has_value());
    }
}

TEST_CASE("matrix algebra properties") {
    std::mt19937_64 rng(2024);

    SUBCASE("associativity, n <= 64") {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 1 + rng() % 64;
            const auto a = oracle::random_matrix(n, rng);
            const auto b = oracle::random_matrix(n, rng);
            const auto c = oracle::random_matrix(n, rng);
            CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
        }
    }

    SUBCASE("identity") {
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 1 + rng() % 130;
            const auto a = oracle::random_matrix(n, rng);
            CHECK(mat_mul(GF2Matrix::identity(n), a) == a);
            CHECK(mat_mul(a, GF2Matrix::identity(n)) == a);
        }
    }

    SUBCASE("exponent law, a, b <= 16, n <= 32") {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 1 + rng() % 32;
            const auto m = oracle::random_matrix(n, rng, 0.2);
            const std::uint64_t a = rng() % 17, b = rng() % 17;
            CHECK(mat_pow(m, a + b) == mat_mul(mat_pow(m, a), mat_pow(m, b)));
        }
    }

    SUBCASE("square-and-multiply equals repeated multiplication, k <= 20, n <= 32") {
        for (std::size_t n : {1, 2, 3, 8, 17, 32}) {
            const auto m = oracle::random_matrix(n, rng, 0.3);
            for (std::uint64_t k = 0; k <= 20; ++k) {
                CHECK(mat_pow(m, k) == oracle::naive_pow(m, k));
            }
        }
    }
}

TEST_CASE("path adjacency powers: nilpotent exactly at n = 2^m - 1") {
    for (std::size_t n = 1; n <= 70; ++n) {
        const auto index = nilpotency_index(path_adjacency(n));
        const bool mersenne = ((n + 1) & n) == 0;
        CHECK_MESSAGE(index.has_value() == mersenne, "n = " << n);
        if (mersenne) CHECK(*index == n);
    }
}
