#pragma once

// Reference implementations used only by the tests. Each one takes a route
// that shares no code with the library path it checks.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "nilpath/gf2_matrix.hpp"
#include "nilpath/pathwalks.hpp"

namespace oracle {

using nilpath::BigCount;
using nilpath::GF2Matrix;
using nilpath::Vertex;

/// Bit-by-bit product over GF(2), straight from the definition.
inline GF2Matrix naive_mul(const GF2Matrix& a, const GF2Matrix& b) {
    const std::size_t n = a.dimension();
    GF2Matrix out(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            bool acc = false;
            for (std::size_t z = 1; z <= n; ++z) {
                acc ^= a.get(i, z) && b.get(z, j);
            }
            out.set(i, j, acc);
        }
    }
    return out;
}

inline GF2Matrix naive_pow(const GF2Matrix& a, std::uint64_t k) {
    GF2Matrix out = GF2Matrix::identity(a.dimension());
    for (std::uint64_t t = 0; t < k; ++t) {
        out = naive_mul(out, a);
    }
    return out;
}

inline GF2Matrix random_matrix(std::size_t n, std::mt19937_64& rng, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    GF2Matrix m(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            m.set(i, j, bit(rng));
        }
    }
    return m;
}

using IntMatrix = std::vector<std::vector<BigCount>>;

/// k-th power of the integer 0/1 adjacency matrix of P_n by full triple-loop products.
inline IntMatrix integer_path_power(std::size_t n, std::uint64_t k) {
    IntMatrix adj(n, std::vector<BigCount>(n));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        adj[i][i + 1] = 1;
        adj[i + 1][i] = 1;
    }
    IntMatrix out(n, std::vector<BigCount>(n));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    for (std::uint64_t t = 0; t < k; ++t) {
        IntMatrix next(n, std::vector<BigCount>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t z = 0; z < n; ++z)
                if (out[i][z] != 0)
                    for (std::size_t j = 0; j < n; ++j) next[i][j] += out[i][z] * adj[z][j];
        out = std::move(next);
    }
    return out;
}

/// Every walk of length k from x to y, by trying all 2^k sign patterns.
inline std::vector<std::vector<Vertex>> brute_walks(std::size_t n, Vertex x, Vertex y,
                                                    unsigned k) {
    std::vector<std::vector<Vertex>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<Vertex> w{x};
        bool inside = true;
        for (unsigned t = 0; t < k && inside; ++t) {
            const Vertex next = w.back() + (((mask >> t) & 1u) ? 1 : -1);
            inside = next >= 1 && next <= static_cast<Vertex>(n);
            w.push_back(next);
        }
        if (inside && w.back() == y) out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

using IntPoly = std::vector<long long>;

inline IntPoly poly_mul(const IntPoly& p, const IntPoly& q) {
    if (p.empty() || q.empty()) return {};
    IntPoly out(p.size() + q.size() - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

inline IntPoly poly_axpy(const IntPoly& acc, const IntPoly& term, long long sign) {
    IntPoly out(std::max(acc.size(), term.size()), 0);
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] += acc[i];
    for (std::size_t i = 0; i < term.size(); ++i) out[i] += sign * term[i];
    return out;
}

/// det of a square matrix of integer polynomials by Laplace expansion along
/// the first row, skipping zero entries.
inline IntPoly symbolic_det(const std::vector<std::vector<IntPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    IntPoly det;
    for (std::size_t c = 0; c < n; ++c) {
        const IntPoly& entry = m[0][c];
        if (std::all_of(entry.begin(), entry.end(), [](long long v) { return v == 0; })) continue;
        std::vector<std::vector<IntPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<IntPoly> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        det = poly_axpy(det, poly_mul(entry, symbolic_det(minor)), c % 2 == 0 ? 1 : -1);
    }
    return det;
}

/// det(lambda I - A) of P_n over the integers, coefficient d at index d.
inline IntPoly path_charpoly_integer(std::size_t n) {
    std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n, IntPoly{0}));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = IntPoly{0, 1};
        if (i + 1 < n) {
            m[i][i + 1] = IntPoly{-1};
            m[i + 1][i] = IntPoly{-1};
        }
    }
    return symbolic_det(m);
}

}  // namespace oracle
