#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nilpath/gf2_matrix.hpp"

namespace nilpath {

/// Exact walk counts; these grow like 2^k and outrun 64 bits near k = 60.
using BigCount = boost::multiprecision::cpp_int;

/// 1-based vertex label of a path graph.
using Vertex = std::int64_t;

/// Vertex count of a path graph, optionally tagged with m when n = 2^m - 1.
struct PathSpec {
    std::optional<unsigned> m;
    std::size_t n;

    /// n = 2^m - 1; throws std::invalid_argument for m = 0 or m > 62.
    static PathSpec from_m(unsigned m);
    /// Detects m when n + 1 is a power of two; throws for n = 0.
    static PathSpec from_n(std::size_t n);

    bool operator==(const PathSpec&) const = default;
};

/// Exponent of 2 in v; v must be positive.
unsigned two_adic_valuation(Vertex v);

/**
 * A finite vertex sequence x_0, ..., x_k. Construction does not check
 * adjacency; use walk_is_valid against a concrete n.
 */
class Walk {
public:
    Walk() = default;
    explicit Walk(std::vector<Vertex> vertices);
    Walk(std::initializer_list<Vertex> vertices);

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    std::size_t length() const noexcept { return vertices_.size() - 1; }
    Vertex start() const { return vertices_.front(); }
    Vertex end() const { return vertices_.back(); }
    Vertex operator[](std::size_t t) const { return vertices_[t]; }

    auto operator<=>(const Walk&) const = default;

    /// "(1,2,3)"
    std::string to_string() const;

private:
    std::vector<Vertex> vertices_;
};

/// Raised when a requested enumeration is longer than the configured cap.
class EnumerationCapExceeded : public std::length_error {
public:
    EnumerationCapExceeded(std::uint64_t k, std::uint64_t cap);
};

inline constexpr std::uint64_t default_enumeration_cap = 24;

/// Enumeration cap: NILPATH_ENUM_CAP if set to a decimal integer, else 24.
std::uint64_t enumeration_cap();

/// Tridiagonal 0/1 adjacency matrix of P_n.
GF2Matrix path_adjacency(std::size_t n);

bool walk_is_valid(std::size_t n, const Walk& w);

/**
 * Visits every walk of length k in P_n starting at x, in lexicographic order.
 * When `end` is set only walks finishing there are reported. The visitor
 * returns false to stop early; the function returns false if stopped.
 */
bool for_each_walk(std::size_t n, Vertex x, std::optional<Vertex> end, std::uint64_t k,
                   const std::function<bool(const Walk&)>& visit,
                   std::uint64_t cap = enumeration_cap());

/// All walks of length k from x to y in P_n, lexicographically ordered.
std::vector<Walk> enumerate_walks(std::size_t n, Vertex x, Vertex y, std::uint64_t k,
                                  std::uint64_t cap = enumeration_cap());

/// Number of walks of length k from x to y, via the neighbour-sum recurrence.
BigCount count_walks_exact(std::size_t n, Vertex x, Vertex y, std::uint64_t k);

/// count_walks_exact mod 2, computed with a GF(2) bit-vector recurrence.
bool count_walks_parity(std::size_t n, Vertex x, Vertex y, std::uint64_t k);

/// Vector form of the exact recurrence: entry v-1 holds the walk count x -> v.
std::vector<BigCount> walk_count_row(std::size_t n, Vertex x, std::uint64_t k);

}  // namespace nilpath
