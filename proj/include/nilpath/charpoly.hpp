#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace nilpath {

/// Polynomial over GF(2) in lambda; bit d of the packed words is the
/// coefficient of lambda^d. Storage never extends past the leading word.
class GF2Poly {
public:
    GF2Poly() = default;

    /// Sum of lambda^e over the given exponents (repeats cancel).
    static GF2Poly from_exponents(std::initializer_list<std::size_t> exponents);
    static GF2Poly monomial(std::size_t degree);
    static GF2Poly one() { return monomial(0); }

    bool coefficient(std::size_t d) const noexcept;
    /// Absent for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    bool is_zero() const noexcept { return words_.empty(); }

    bool operator==(const GF2Poly&) const = default;

    /// "x^7 + x + 1"; the zero polynomial prints as "0".
    std::string to_string(const std::string& var = "x") const;

    friend GF2Poly poly_add(const GF2Poly& p, const GF2Poly& q);
    friend GF2Poly poly_shift_mul(const GF2Poly& p);

private:
    void flip(std::size_t d);
    void normalize() noexcept;

    std::vector<std::uint64_t> words_;
};

GF2Poly poly_add(const GF2Poly& p, const GF2Poly& q);

/// p * lambda.
GF2Poly poly_shift_mul(const GF2Poly& p);

/// det(lambda I - A) for the adjacency matrix of P_n, reduced mod 2, from
/// p_0 = 1, p_1 = lambda, p_t = lambda p_{t-1} + p_{t-2}.
GF2Poly charpoly_path(std::size_t n);

/// charpoly_path(n) == lambda^n.
bool charpoly_is_monomial(std::size_t n);

}  // namespace nilpath
