#include "nilpath/charpoly.hpp"

#include <algorithm>
#include <bit>

namespace nilpath {

GF2Poly GF2Poly::from_exponents(std::initializer_list<std::size_t> exponents) {
    GF2Poly p;
    for (const std::size_t e : exponents) {
        p.flip(e);
    }
    p.normalize();
    return p;
}

GF2Poly GF2Poly::monomial(std::size_t degree) { return from_exponents({degree}); }

bool GF2Poly::coefficient(std::size_t d) const noexcept {
    const std::size_t w = d / 64;
    return w < words_.size() && ((words_[w] >> (d % 64)) & 1u);
}

std::optional<std::size_t> GF2Poly::degree() const noexcept {
    if (words_.empty()) {
        return std::nullopt;
    }
    const std::uint64_t top = words_.back();
    return (words_.size() - 1) * 64 + (63 - static_cast<std::size_t>(std::countl_zero(top)));
}

std::string GF2Poly::to_string(const std::string& var) const {
    const auto deg = degree();
    if (!deg) {
        return "0";
    }
    std::string out;
    for (std::size_t d = *deg + 1; d-- > 0;) {
        if (!coefficient(d)) continue;
        if (!out.empty()) out += " + ";
        if (d == 0) {
            out += "1";
        } else if (d == 1) {
            out += var;
        } else {
            out += var + "^" + std::to_string(d);
        }
    }
    return out;
}

void GF2Poly::flip(std::size_t d) {
    if (d / 64 >= words_.size()) {
        words_.resize(d / 64 + 1, 0);
    }
    words_[d / 64] ^= std::uint64_t{1} << (d % 64);
}

void GF2Poly::normalize() noexcept {
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
}

GF2Poly poly_add(const GF2Poly& p, const GF2Poly& q) {
    GF2Poly sum;
    sum.words_.resize(std::max(p.words_.size(), q.words_.size()), 0);
    for (std::size_t i = 0; i < p.words_.size(); ++i) sum.words_[i] ^= p.words_[i];
    for (std::size_t i = 0; i < q.words_.size(); ++i) sum.words_[i] ^= q.words_[i];
    sum.normalize();
    return sum;
}

GF2Poly poly_shift_mul(const GF2Poly& p) {
    GF2Poly out;
    if (p.is_zero()) {
        return out;
    }
    out.words_.resize(p.words_.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < p.words_.size(); ++i) {
        out.words_[i] = (p.words_[i] << 1) | carry;
        carry = p.words_[i] >> 63;
    }
    out.words_.back() = carry;
    out.normalize();
    return out;
}

GF2Poly charpoly_path(std::size_t n) {
    // Over GF(2) the cofactor recurrence's minus sign is a plus.
    GF2Poly prev = GF2Poly::one();
    if (n == 0) {
        return prev;
    }
    GF2Poly cur = GF2Poly::monomial(1);
    for (std::size_t t = 2; t <= n; ++t) {
        GF2Poly next = poly_add(poly_shift_mul(cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool charpoly_is_monomial(std::size_t n) { return charpoly_path(n) == GF2Poly::monomial(n); }

}  // namespace nilpath
