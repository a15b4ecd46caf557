#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include <vector>

namespace nilpath {

/**
 * Dense square matrix over GF(2).
 *
 * Rows are packed LSB-first into 64-bit words: column j (1-based) of a row
 * lives in word (j-1)/64 at bit (j-1)%64. Storage bits past column n are
 * always zero, so whole-word comparisons and zero tests are exact.
 *
 * All public indices are 1-based.
 */
class GF2Matrix {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    /// Zero matrix of dimension n; throws std::invalid_argument for n = 0.
    explicit GF2Matrix(std::size_t n);

    static GF2Matrix zero(std::size_t n) { return GF2Matrix(n); }
    static GF2Matrix identity(std::size_t n);

    std::size_t dimension() const noexcept { return n_; }
    std::size_t words_per_row() const noexcept { return words_per_row_; }

    bool get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool bit);

    std::span<const Word> row(std::size_t i) const;
    std::span<Word> row(std::size_t i);

    bool operator==(const GF2Matrix&) const = default;

    /// Rows as strings of '0'/'1', one per line.
    std::string to_string() const;

private:
    std::size_t n_;
    std::size_t words_per_row_;
    std::vector<Word> bits_;
};

/// Builds an n x n matrix whose (i, j) bit is entries(i, j), 1-based.
GF2Matrix mat_from_entries(std::size_t n,
                           const std::function<bool(std::size_t, std::size_t)>& entries);

/// Product over GF(2). Throws std::invalid_argument on dimension mismatch.
GF2Matrix mat_mul(const GF2Matrix& a, const GF2Matrix& b);

/// a^k by square-and-multiply; a^0 is the identity.
GF2Matrix mat_pow(const GF2Matrix& a, std::uint64_t k);

bool mat_is_zero(const GF2Matrix& a) noexcept;

/// Smallest k >= 1 with a^k = 0, or nullopt when a is not nilpotent.
///
/// Relies on the standard fact that an n x n nilpotent matrix satisfies
/// a^n = 0, so no exponent above n needs to be considered.
std::optional<std::uint64_t> nilpotency_index(const GF2Matrix& a);

}  // namespace nilpath
