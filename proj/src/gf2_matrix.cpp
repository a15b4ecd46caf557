#include "nilpath/gf2_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nilpath {

namespace {

void check_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i < 1 || i > n || j < 1 || j > n) {
        throw std::out_of_range("GF2Matrix index (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") outside 1.." + std::to_string(n));
    }
}

}  // namespace

GF2Matrix::GF2Matrix(std::size_t n)
    : n_(n), words_per_row_((n + word_bits - 1) / word_bits) {
    if (n == 0) {
        throw std::invalid_argument("GF2Matrix dimension must be positive");
    }
    bits_.assign(n_ * words_per_row_, 0);
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n);
    for (std::size_t i = 1; i <= n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

bool GF2Matrix::get(std::size_t i, std::size_t j) const {
    check_index(n_, i, j);
    const std::size_t c = j - 1;
    return (bits_[(i - 1) * words_per_row_ + c / word_bits] >> (c % word_bits)) & 1u;
}

void GF2Matrix::set(std::size_t i, std::size_t j, bool bit) {
    check_index(n_, i, j);
    const std::size_t c = j - 1;
    Word& w = bits_[(i - 1) * words_per_row_ + c / word_bits];
    const Word mask = Word{1} << (c % word_bits);
    w = bit ? (w | mask) : (w & ~mask);
}

std::span<const GF2Matrix::Word> GF2Matrix::row(std::size_t i) const {
    check_index(n_, i, 1);
    return {bits_.data() + (i - 1) * words_per_row_, words_per_row_};
}

std::span<GF2Matrix::Word> GF2Matrix::row(std::size_t i) {
    check_index(n_, i, 1);
    return {bits_.data() + (i - 1) * words_per_row_, words_per_row_};
}

std::string GF2Matrix::to_string() const {
    std::string out;
    out.reserve(n_ * (n_ + 1));
    for (std::size_t i = 1; i <= n_; ++i) {
        for (std::size_t j = 1; j <= n_; ++j) {
            out.push_back(get(i, j) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

GF2Matrix mat_from_entries(std::size_t n,
                           const std::function<bool(std::size_t, std::size_t)>& entries) {
    GF2Matrix m(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (entries(i, j)) {
                m.set(i, j, true);
            }
        }
    }
    return m;
}

// Row i of the product is the XOR of the rows z of b selected by the set bits
// of row i of a.
GF2Matrix mat_mul(const GF2Matrix& a, const GF2Matrix& b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("mat_mul: dimension mismatch (" +
                                    std::to_string(a.dimension()) + " vs " +
                                    std::to_string(b.dimension()) + ")");
    }
    const std::size_t n = a.dimension();
    const std::size_t wpr = a.words_per_row();
    GF2Matrix out(n);

    for (std::size_t i = 1; i <= n; ++i) {
        const auto arow = a.row(i);
        auto orow = out.row(i);
        GF2Matrix::Word* dst = orow.data();
        for (std::size_t w = 0; w < wpr; ++w) {
            GF2Matrix::Word bits = arow[w];
            while (bits != 0) {
                const std::size_t z = w * GF2Matrix::word_bits +
                                      static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                const GF2Matrix::Word* src = b.row(z + 1).data();
                for (std::size_t t = 0; t < wpr; ++t) {
                    dst[t] ^= src[t];
                }
            }
        }
    }
    return out;
}

GF2Matrix mat_pow(const GF2Matrix& a, std::uint64_t k) {
    GF2Matrix result = GF2Matrix::identity(a.dimension());
    if (k == 0) {
        return result;
    }
    GF2Matrix base = a;
    bool first = true;
    while (true) {
        if (k & 1u) {
            result = first ? base : mat_mul(result, base);
            first = false;
        }
        k >>= 1;
        if (k == 0) {
            break;
        }
        base = mat_mul(base, base);
    }
    return result;
}

bool mat_is_zero(const GF2Matrix& a) noexcept {
    for (std::size_t i = 1; i <= a.dimension(); ++i) {
        const auto r = a.row(i);
        if (std::any_of(r.begin(), r.end(), [](GF2Matrix::Word w) { return w != 0; })) {
            return false;
        }
    }
    return true;
}

// Binary lifting on the exponent: nonzero powers form a prefix 0..t of the
// exponents, so t is assembled bit by bit from the squares a^(2^j), 2^j <= n.
std::optional<std::uint64_t> nilpotency_index(const GF2Matrix& a) {
    const std::uint64_t n = a.dimension();
    std::vector<GF2Matrix> squares{a};
    while ((std::uint64_t{1} << squares.size()) <= n) {
        squares.push_back(mat_mul(squares.back(), squares.back()));
    }

    GF2Matrix prefix = GF2Matrix::identity(a.dimension());
    std::uint64_t last_nonzero = 0;
    for (std::size_t j = squares.size(); j-- > 0;) {
        GF2Matrix candidate = mat_mul(prefix, squares[j]);
        if (!mat_is_zero(candidate)) {
            prefix = std::move(candidate);
            last_nonzero += std::uint64_t{1} << j;
        }
    }
    if (last_nonzero + 1 > n) {
        return std::nullopt;
    }
    return last_nonzero + 1;
}

}  // namespace nilpath
