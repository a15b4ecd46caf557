#include "nilpath/pathwalks.hpp"

#include <cstdlib>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

namespace nilpath {

namespace {

void check_vertex(std::size_t n, Vertex v, const char* what) {
    if (v < 1 || static_cast<std::uint64_t>(v) > n) {
        throw std::invalid_argument(std::string(what) + " vertex " + std::to_string(v) +
                                    " outside 1.." + std::to_string(n));
    }
}

void check_order(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("path graph needs at least one vertex");
    }
}

Vertex distance(Vertex a, Vertex b) { return a > b ? a - b : b - a; }

}  // namespace

PathSpec PathSpec::from_m(unsigned m) {
    if (m == 0 || m > 62) {
        throw std::invalid_argument("m must lie in 1..62, got " + std::to_string(m));
    }
    return PathSpec{m, (std::size_t{1} << m) - 1};
}

PathSpec PathSpec::from_n(std::size_t n) {
    check_order(n);
    const std::size_t next = n + 1;
    if ((next & n) == 0) {
        unsigned m = 0;
        for (std::size_t v = next; v > 1; v >>= 1) {
            ++m;
        }
        return PathSpec{m, n};
    }
    return PathSpec{std::nullopt, n};
}

unsigned two_adic_valuation(Vertex v) {
    if (v <= 0) {
        throw std::invalid_argument("2-adic valuation needs a positive integer");
    }
    unsigned e = 0;
    while ((v & 1) == 0) {
        v >>= 1;
        ++e;
    }
    return e;
}

Walk::Walk(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) {
        throw std::invalid_argument("a walk has at least one vertex");
    }
}

Walk::Walk(std::initializer_list<Vertex> vertices) : Walk(std::vector<Vertex>(vertices)) {}

std::string Walk::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t t = 0; t < vertices_.size(); ++t) {
        if (t > 0) {
            os << ',';
        }
        os << vertices_[t];
    }
    os << ')';
    return os.str();
}

EnumerationCapExceeded::EnumerationCapExceeded(std::uint64_t k, std::uint64_t cap)
    : std::length_error("walk length " + std::to_string(k) + " exceeds enumeration cap " +
                        std::to_string(cap) + " (set NILPATH_ENUM_CAP to override)") {}

std::uint64_t enumeration_cap() {
    const char* env = std::getenv("NILPATH_ENUM_CAP");
    if (env == nullptr || *env == '\0') {
        return default_enumeration_cap;
    }
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || env[0] == '-') {
        return default_enumeration_cap;
    }
    return value;
}

GF2Matrix path_adjacency(std::size_t n) {
    check_order(n);
    GF2Matrix a(n);
    for (std::size_t i = 1; i < n; ++i) {
        a.set(i, i + 1, true);
        a.set(i + 1, i, true);
    }
    return a;
}

bool walk_is_valid(std::size_t n, const Walk& w) {
    const auto& vs = w.vertices();
    for (std::size_t t = 0; t < vs.size(); ++t) {
        if (vs[t] < 1 || static_cast<std::uint64_t>(vs[t]) > n) {
            return false;
        }
        if (t > 0 && distance(vs[t], vs[t - 1]) != 1) {
            return false;
        }
    }
    return true;
}

bool for_each_walk(std::size_t n, Vertex x, std::optional<Vertex> end, std::uint64_t k,
                   const std::function<bool(const Walk&)>& visit, std::uint64_t cap) {
    check_order(n);
    check_vertex(n, x, "start");
    if (end) {
        check_vertex(n, *end, "end");
    }
    if (k > cap) {
        throw EnumerationCapExceeded(k, cap);
    }

    std::vector<Vertex> path;
    path.reserve(k + 1);
    path.push_back(x);
    const Vertex last = static_cast<Vertex>(n);

    // Depth-first, smaller neighbour first, so output is lexicographic.
    std::function<bool(std::uint64_t)> extend = [&](std::uint64_t remaining) -> bool {
        const Vertex here = path.back();
        if (end && static_cast<std::uint64_t>(distance(here, *end)) > remaining) {
            return true;
        }
        if (remaining == 0) {
            if (end && here != *end) {
                return true;
            }
            return visit(Walk(path));
        }
        for (const Vertex next : {here - 1, here + 1}) {
            if (next < 1 || next > last) {
                continue;
            }
            path.push_back(next);
            const bool go_on = extend(remaining - 1);
            path.pop_back();
            if (!go_on) {
                return false;
            }
        }
        return true;
    };
    return extend(k);
}

std::vector<Walk> enumerate_walks(std::size_t n, Vertex x, Vertex y, std::uint64_t k,
                                  std::uint64_t cap) {
    std::vector<Walk> out;
    for_each_walk(
        n, x, y, k,
        [&out](const Walk& w) {
            out.push_back(w);
            return true;
        },
        cap);
    return out;
}

std::vector<BigCount> walk_count_row(std::size_t n, Vertex x, std::uint64_t k) {
    check_order(n);
    check_vertex(n, x, "start");
    std::vector<BigCount> cur(n), next(n);
    cur[static_cast<std::size_t>(x - 1)] = 1;
    for (std::uint64_t step = 0; step < k; ++step) {
        for (std::size_t v = 0; v < n; ++v) {
            next[v] = 0;
            if (v > 0) {
                next[v] += cur[v - 1];
            }
            if (v + 1 < n) {
                next[v] += cur[v + 1];
            }
        }
        cur.swap(next);
    }
    return cur;
}

BigCount count_walks_exact(std::size_t n, Vertex x, Vertex y, std::uint64_t k) {
    check_order(n);
    check_vertex(n, y, "end");
    return walk_count_row(n, x, k)[static_cast<std::size_t>(y - 1)];
}

bool count_walks_parity(std::size_t n, Vertex x, Vertex y, std::uint64_t k) {
    check_order(n);
    check_vertex(n, x, "start");
    check_vertex(n, y, "end");
    // Bit v-1 is the parity of the number of walks ending at v; the shifts
    // drop bits that would leave 1..n.
    boost::dynamic_bitset<std::uint64_t> cur(n);
    cur.set(static_cast<std::size_t>(x - 1));
    for (std::uint64_t step = 0; step < k; ++step) {
        cur = (cur << 1) ^ (cur >> 1);
    }
    return cur.test(static_cast<std::size_t>(y - 1));
}

}  // namespace nilpath
