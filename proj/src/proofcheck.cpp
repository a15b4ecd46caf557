#include "nilpath/proofcheck.hpp"

#include <algorithm>
#include <string>

namespace nilpath {

namespace {

void check_vertex(std::size_t n, Vertex v, const char* what) {
    if (v < 1 || static_cast<std::uint64_t>(v) > n) {
        throw std::invalid_argument(std::string(what) + " " + std::to_string(v) +
                                    " outside 1.." + std::to_string(n));
    }
}

std::size_t path_order(unsigned m) { return (std::size_t{1} << m) - 1; }

// Reflects the segment strictly between the first two visits of pivot.
// The caller guarantees at least two visits.
NaiveReflection reflect_between_first_visits(const Walk& w, Vertex pivot, std::size_t n) {
    std::vector<Vertex> vs = w.vertices();
    const auto first = std::find(vs.begin(), vs.end(), pivot);
    const auto second = std::find(first + 1, vs.end(), pivot);
    for (auto it = first + 1; it != second; ++it) {
        const Vertex image = 2 * pivot - *it;
        if (image < 1 || static_cast<std::uint64_t>(image) > n) {
            return OutOfBounds{static_cast<std::size_t>(it - vs.begin()), image};
        }
        *it = image;
    }
    return Walk(std::move(vs));
}

// c[t] = number of walks of length t from `from` to `to` in P_n, t = 0..k.
std::vector<BigCount> count_series(std::size_t n, Vertex from, Vertex to, std::uint64_t k) {
    std::vector<BigCount> series(k + 1);
    std::vector<BigCount> cur(n), next(n);
    cur[static_cast<std::size_t>(from - 1)] = 1;
    const auto target = static_cast<std::size_t>(to - 1);
    series[0] = cur[target];
    for (std::uint64_t t = 1; t <= k; ++t) {
        for (std::size_t v = 0; v < n; ++v) {
            next[v] = 0;
            if (v > 0) next[v] += cur[v - 1];
            if (v + 1 < n) next[v] += cur[v + 1];
        }
        cur.swap(next);
        series[t] = cur[target];
    }
    return series;
}

// f[t] = number of walks from `from` that reach pivot for the first time at
// step t. A walk starting at the pivot arrives at step 0.
std::vector<BigCount> first_arrivals(std::size_t n, Vertex pivot, Vertex from, std::uint64_t k) {
    std::vector<BigCount> f(k + 1);
    if (from == pivot) {
        f[0] = 1;
        return f;
    }
    const auto p = static_cast<std::size_t>(pivot - 1);
    std::vector<BigCount> cur(n), next(n);
    cur[static_cast<std::size_t>(from - 1)] = 1;
    for (std::uint64_t t = 1; t <= k; ++t) {
        for (std::size_t v = 0; v < n; ++v) {
            next[v] = 0;
            if (v > 0) next[v] += cur[v - 1];
            if (v + 1 < n) next[v] += cur[v + 1];
        }
        f[t] = next[p];
        next[p] = 0;
        cur.swap(next);
    }
    return f;
}

std::string parity_word(const BigCount& c) { return (c & 1) == 0 ? "even" : "odd"; }

std::string describe(const HalfQuery& q) {
    return "P_" + std::to_string(path_order(q.m)) + " k=" + std::to_string(q.k) +
           " x=" + std::to_string(q.x) + " y=" + std::to_string(q.y);
}

}  // namespace

const char* to_string(ClassTag tag) noexcept {
    switch (tag) {
        case ClassTag::Class1: return "class1";
        case ClassTag::Class2: return "class2";
        case ClassTag::Class3: return "class3";
    }
    return "?";
}

WalkClass classify(const Walk& w, Vertex pivot) {
    const auto& vs = w.vertices();
    std::size_t visits = 0;
    for (std::size_t t = 0; t < vs.size(); ++t) {
        if (vs[t] < 1 || (t > 0 && vs[t] - vs[t - 1] != 1 && vs[t - 1] - vs[t] != 1)) {
            throw std::invalid_argument("classify: not a walk in a path graph: " +
                                        w.to_string());
        }
        if (vs[t] == pivot) {
            ++visits;
        }
    }
    const ClassTag tag = visits == 0   ? ClassTag::Class1
                         : visits == 1 ? ClassTag::Class2
                                       : ClassTag::Class3;
    return WalkClass{tag, visits};
}

Class2Split class2_decompose(const Walk& w, Vertex pivot) {
    if (classify(w, pivot).tag != ClassTag::Class2) {
        throw std::invalid_argument("class2_decompose: " + w.to_string() +
                                    " does not visit " + std::to_string(pivot) +
                                    " exactly once");
    }
    const auto& vs = w.vertices();
    const auto at = std::find(vs.begin(), vs.end(), pivot);
    Class2Split split{static_cast<std::size_t>(at - vs.begin()), std::nullopt, std::nullopt};
    if (at != vs.begin()) {
        split.left = Walk(std::vector<Vertex>(vs.begin(), at));
    }
    if (at + 1 != vs.end()) {
        split.right = Walk(std::vector<Vertex>(at + 1, vs.end()));
    }
    return split;
}

Walk splice(const Class2Split& split, Vertex pivot) {
    std::vector<Vertex> vs;
    if (split.left) {
        vs = split.left->vertices();
    }
    vs.push_back(pivot);
    if (split.right) {
        vs.insert(vs.end(), split.right->vertices().begin(), split.right->vertices().end());
    }
    return Walk(std::move(vs));
}

ReflectionOutOfBounds::ReflectionOutOfBounds(OutOfBounds where)
    : std::out_of_range("reflected vertex " + std::to_string(where.vertex) + " at step " +
                        std::to_string(where.step) + " leaves the path graph"),
      where_(where) {}

Walk reflect_class3(const Walk& w, Vertex pivot, std::size_t n) {
    if (!walk_is_valid(n, w)) {
        throw std::invalid_argument("reflect_class3: " + w.to_string() + " is not a walk in P_" +
                                    std::to_string(n));
    }
    if (classify(w, pivot).tag != ClassTag::Class3) {
        throw std::invalid_argument("reflect_class3: " + w.to_string() + " visits " +
                                    std::to_string(pivot) + " fewer than twice");
    }
    auto result = reflect_between_first_visits(w, pivot, n);
    if (const auto* oob = std::get_if<OutOfBounds>(&result)) {
        throw ReflectionOutOfBounds(*oob);
    }
    return std::get<Walk>(std::move(result));
}

ClassCensus class_census(std::size_t n, Vertex pivot, Vertex x, Vertex y, std::uint64_t k) {
    if (n == 0) {
        throw std::invalid_argument("class_census: empty path graph");
    }
    check_vertex(n, pivot, "pivot");
    check_vertex(n, x, "start");
    check_vertex(n, y, "end");

    const auto p = static_cast<std::size_t>(pivot - 1);
    // by_visits[c][v]: walks ending at v with min(2, pivot visits) == c.
    std::array<std::vector<BigCount>, 3> cur, next;
    for (auto& layer : cur) layer.assign(n, 0);
    for (auto& layer : next) layer.assign(n, 0);
    cur[x == pivot ? 1 : 0][static_cast<std::size_t>(x - 1)] = 1;

    for (std::uint64_t t = 0; t < k; ++t) {
        for (auto& layer : next) std::fill(layer.begin(), layer.end(), 0);
        for (std::size_t c = 0; c < 3; ++c) {
            for (std::size_t v = 0; v < n; ++v) {
                if (cur[c][v] == 0) continue;
                for (const std::size_t u : {v - 1, v + 1}) {
                    if (u >= n) continue;  // v - 1 wraps for v == 0
                    const std::size_t c2 = std::min<std::size_t>(2, c + (u == p ? 1 : 0));
                    next[c2][u] += cur[c][v];
                }
            }
        }
        std::swap(cur, next);
    }

    ClassCensus census;
    const auto end = static_cast<std::size_t>(y - 1);
    census.c1 = cur[0][end];
    census.c2 = cur[1][end];
    census.c3 = cur[2][end];

    // A single visit at step i splits into a first arrival from x and, read
    // backwards, a first arrival from y.
    const auto from_start = first_arrivals(n, pivot, x, k);
    const auto from_end = first_arrivals(n, pivot, y, k);
    census.per_step_c2.resize(k + 1);
    for (std::uint64_t i = 0; i <= k; ++i) {
        census.per_step_c2[i] = from_start[i] * from_end[k - i];
    }
    return census;
}

bool TheoremCertificate::structurally_even() const {
    if (base_case) {
        return true;
    }
    if (!class1 || !class3 || !class1->holds || !class3->holds) {
        return false;
    }
    return std::all_of(class2.begin(), class2.end(),
                       [](const Class2StepCertificate& s) { return s.holds; });
}

bool TheoremCertificate::passed() const {
    if (!structurally_even() || dp_parity) {
        return false;
    }
    if (census) {
        if ((census->c1 & 1) != 0 || (census->c2 & 1) != 0 || (census->c3 & 1) != 0) {
            return false;
        }
        for (const auto& c : census->per_step_c2) {
            if ((c & 1) != 0) return false;
        }
    }
    return true;
}

TheoremChecker::TheoremChecker(TheoremOptions options) : options_(options) {}

TheoremCertificate TheoremChecker::check(unsigned m, std::uint64_t k, Vertex x, Vertex y) {
    if (m == 0 || m > 62) {
        throw std::invalid_argument("m must lie in 1..62, got " + std::to_string(m));
    }
    const std::size_t n = path_order(m);
    if (k < n) {
        throw std::invalid_argument("walk length " + std::to_string(k) +
                                    " is below the bound k >= n = " + std::to_string(n));
    }
    check_vertex(n, x, "start");
    check_vertex(n, y, "end");

    TheoremCertificate cert{};
    cert.m = m;
    cert.n = n;
    cert.k = k;
    cert.x = x;
    cert.y = y;
    cert.dp_parity = count_walks_parity(n, x, y, k);
    if (m == 1) {
        cert.base_case = true;
        return cert;
    }
    cert.class1 = certify_class1(m, k, x, y);
    cert.class2 = certify_class2(m, k, x, y);
    cert.class3 = certify_class3(m, k, x, y,
                                 options_.enumerate_pairing && k <= options_.enumeration_cap);
    cert.census = class_census(n, Vertex{1} << (m - 1), x, y, k);
    memo_.emplace(HalfQuery{m, k, x, y}, cert.structurally_even());
    return cert;
}

bool TheoremChecker::holds(const HalfQuery& q) {
    if (q.k < path_order(q.m)) {
        throw std::logic_error("sub-instance below the length bound: " + describe(q));
    }
    if (q.m == 1) {
        return true;
    }
    if (const auto it = memo_.find(q); it != memo_.end()) {
        return it->second;
    }
    bool ok = certify_class1(q.m, q.k, q.x, q.y).holds;
    if (ok) {
        const auto steps = certify_class2(q.m, q.k, q.x, q.y);
        ok = std::all_of(steps.begin(), steps.end(),
                         [](const Class2StepCertificate& s) { return s.holds; });
    }
    ok = ok && certify_class3(q.m, q.k, q.x, q.y, false).holds;
    memo_.emplace(q, ok);
    return ok;
}

Class1Certificate TheoremChecker::certify_class1(unsigned m, std::uint64_t k, Vertex x,
                                                 Vertex y) {
    const Vertex pivot = Vertex{1} << (m - 1);
    if (x == pivot || y == pivot) {
        return {Class1Basis::EndpointIsPivot, std::nullopt, true};
    }
    if ((x < pivot) != (y < pivot)) {
        return {Class1Basis::OppositeSides, std::nullopt, true};
    }
    // Either side of the pivot is a copy of P_{pivot-1}; the right one is shifted.
    const Vertex shift = x < pivot ? 0 : pivot;
    const HalfQuery q{m - 1, k, x - shift, y - shift};
    return {Class1Basis::HalfGraphRecursion, q, holds(q)};
}

std::vector<Class2StepCertificate> TheoremChecker::certify_class2(unsigned m, std::uint64_t k,
                                                                  Vertex x, Vertex y) {
    const Vertex pivot = Vertex{1} << (m - 1);
    const std::uint64_t half = static_cast<std::uint64_t>(pivot - 1);
    const auto to_half = [pivot](Vertex v) { return v < pivot ? v : v - pivot; };
    // Neighbour of the pivot on v's side, in half-graph labels.
    const auto pivot_neighbour = [pivot](Vertex v) { return v < pivot ? pivot - 1 : Vertex{1}; };

    const auto left_query = [&](std::uint64_t len) {
        return HalfQuery{m - 1, len, to_half(x), pivot_neighbour(x)};
    };
    const auto right_query = [&](std::uint64_t len) {
        return HalfQuery{m - 1, len, pivot_neighbour(y), to_half(y)};
    };

    std::vector<Class2StepCertificate> steps;
    steps.reserve(k + 1);
    for (std::uint64_t i = 0; i <= k; ++i) {
        Class2StepCertificate s{i, Class2Basis::Empty, std::nullopt, true};
        if (i == 0) {
            if (x == pivot && y != pivot) {
                s.basis = Class2Basis::RightRecursion;
                s.query = right_query(k - 1);
            }
        } else if (i == k) {
            if (y == pivot && x != pivot) {
                s.basis = Class2Basis::LeftRecursion;
                s.query = left_query(k - 1);
            }
        } else if (x != pivot && y != pivot) {
            // k >= 2^m - 1 forces one side to have length >= 2^(m-1) - 1.
            if (i - 1 >= half) {
                s.basis = Class2Basis::LeftRecursion;
                s.query = left_query(i - 1);
            } else {
                s.basis = Class2Basis::RightRecursion;
                s.query = right_query(k - i - 1);
            }
        }
        if (s.query) {
            s.holds = holds(*s.query);
        }
        steps.push_back(s);
    }
    return steps;
}

Class3Certificate TheoremChecker::certify_class3(unsigned m, std::uint64_t k, Vertex x,
                                                 Vertex y, bool enumerate) {
    const std::size_t n = path_order(m);
    const Vertex pivot = Vertex{1} << (m - 1);
    const std::size_t half = static_cast<std::size_t>(pivot - 1);

    // Class3 walk = first arrival at the pivot (a steps), an excursion of
    // b >= 2 steps to one side and back, then any walk to y.
    const auto arrivals = first_arrivals(n, pivot, x, k);
    const auto tails = count_series(n, pivot, y, k);
    const auto left_loops = count_series(half, static_cast<Vertex>(half), static_cast<Vertex>(half), k);
    const auto right_loops = count_series(half, 1, 1, k);

    BigCount left_first = 0, right_first = 0;
    for (std::uint64_t a = 0; a <= k; ++a) {
        if (arrivals[a] == 0) continue;
        BigCount left_sum = 0, right_sum = 0;
        for (std::uint64_t b = 2; a + b <= k; ++b) {
            left_sum += left_loops[b - 2] * tails[k - a - b];
            right_sum += right_loops[b - 2] * tails[k - a - b];
        }
        left_first += arrivals[a] * left_sum;
        right_first += arrivals[a] * right_sum;
    }

    Class3Certificate cert{Class3Basis::CountedPairing, left_first, right_first, 0, 0,
                           left_first == right_first};
    if (!enumerate) {
        return cert;
    }

    cert.basis = Class3Basis::EnumeratedPairing;
    BigCount seen_left = 0, seen_right = 0;
    for_each_walk(
        n, x, y, k,
        [&](const Walk& w) {
            const WalkClass cls = classify(w, pivot);
            if (cls.tag != ClassTag::Class3) {
                return true;
            }
            ++cert.walks_checked;
            const auto& vs = w.vertices();
            const auto first = std::find(vs.begin(), vs.end(), pivot);
            (first[1] < pivot ? seen_left : seen_right) += 1;
            try {
                const Walk image = reflect_class3(w, pivot, n);
                const bool fine = walk_is_valid(n, image) &&
                                  classify(image, pivot).tag == ClassTag::Class3 &&
                                  image.start() == w.start() && image.end() == w.end() &&
                                  image.length() == w.length() && image != w &&
                                  reflect_class3(image, pivot, n) == w;
                if (!fine) ++cert.violations;
            } catch (const ReflectionOutOfBounds&) {
                ++cert.violations;
            }
            return true;
        },
        options_.enumeration_cap);
    if (seen_left != left_first || seen_right != right_first) {
        ++cert.violations;
    }
    cert.holds = cert.violations == 0 && seen_left == seen_right;
    return cert;
}

TheoremCertificate theorem_check(unsigned m, std::uint64_t k, Vertex x, Vertex y,
                                 TheoremOptions options) {
    TheoremChecker checker(options);
    return checker.check(m, k, x, y);
}

ParityReport theorem_report(const TheoremCertificate& cert) {
    ParityReport r;
    r.command = "verify-theorem";
    r.param("m", static_cast<std::int64_t>(cert.m))
        .param("n", static_cast<std::int64_t>(cert.n))
        .param("k", static_cast<std::int64_t>(cert.k))
        .param("x", cert.x)
        .param("y", cert.y);

    r.check("walk count parity", "0", cert.dp_parity ? "1" : "0", "walk-parity-dp");
    if (cert.base_case) {
        r.check("base case: no walks of positive length in P_1", "even", "even", "base-case");
        return r;
    }

    const std::string yes_no[] = {"odd", "even"};
    const auto& c1 = *cert.class1;
    switch (c1.basis) {
        case Class1Basis::EndpointIsPivot:
            r.check("class1: endpoint is the pivot, class empty", "even", "even", "class-split");
            break;
        case Class1Basis::OppositeSides:
            r.check("class1: endpoints on opposite sides, class empty", "even", "even",
                    "class-split");
            break;
        case Class1Basis::HalfGraphRecursion:
            r.check("class1: recursion into " + describe(*c1.query), "even", yes_no[c1.holds],
                    "half-graph-recursion");
            break;
    }

    std::size_t empty_steps = 0;
    for (const auto& s : cert.class2) {
        if (s.basis == Class2Basis::Empty) {
            ++empty_steps;
            continue;
        }
        const char* side = s.basis == Class2Basis::LeftRecursion ? "left" : "right";
        r.check("class2 step " + std::to_string(s.step) + ": " + side + " subwalk, " +
                    describe(*s.query),
                "even", yes_no[s.holds], "half-graph-recursion");
    }

    const auto& c3 = *cert.class3;
    if (c3.basis == Class3Basis::EnumeratedPairing) {
        r.check("class3: reflection pairing violations over " +
                    std::to_string(c3.walks_checked) + " walks",
                "0", std::to_string(c3.violations), "reflection-pairing");
    }
    r.check("class3: left-first excursions match right-first", c3.left_first.str(),
            c3.right_first.str(), "pairing-count");

    const auto& census = *cert.census;
    r.check("census class1 parity", "even", parity_word(census.c1), "class-census");
    r.check("census class2 parity", "even", parity_word(census.c2), "class-census");
    r.check("census class3 parity", "even", parity_word(census.c3), "class-census");
    std::size_t odd_steps = 0;
    for (const auto& c : census.per_step_c2) {
        if ((c & 1) != 0) ++odd_steps;
    }
    r.check("census class2 steps with odd count", "0", std::to_string(odd_steps), "class-census");

    r.value("class1", census.c1.str())
        .value("class2", census.c2.str())
        .value("class3", census.c3.str())
        .value("empty class2 steps", std::to_string(empty_steps));
    return r;
}

std::optional<Vertex> naive_pivot(const Walk& w) {
    struct Visits {
        std::size_t count = 0;
        std::size_t first = 0;
        std::size_t second = 0;
    };
    std::map<Vertex, Visits> seen;
    const auto& vs = w.vertices();
    for (std::size_t t = 0; t < vs.size(); ++t) {
        auto& v = seen[vs[t]];
        if (v.count == 0) v.first = t;
        if (v.count == 1) v.second = t;
        ++v.count;
    }

    std::optional<Vertex> best;
    unsigned best_val = 0;
    Visits best_visits;
    for (const auto& [vertex, visits] : seen) {
        if (visits.count < 2) continue;
        const unsigned val = two_adic_valuation(vertex);
        const bool better =
            !best || val > best_val ||
            (val == best_val &&
             std::tie(visits.second, visits.first) < std::tie(best_visits.second, best_visits.first));
        if (better) {
            best = vertex;
            best_val = val;
            best_visits = visits;
        }
    }
    return best;
}

NaiveReflection naive_reflect(const Walk& w, std::size_t n) {
    const auto pivot = naive_pivot(w);
    if (!pivot) {
        throw std::invalid_argument("naive_reflect: no vertex of " + w.to_string() +
                                    " repeats");
    }
    return reflect_between_first_visits(w, *pivot, n);
}

std::optional<Walk> find_naive_failure(std::size_t n, std::uint64_t k,
                                       std::optional<Vertex> required_pivot, std::uint64_t cap) {
    std::optional<Walk> found;
    for (Vertex x = 1; x <= static_cast<Vertex>(n) && !found; ++x) {
        for_each_walk(
            n, x, std::nullopt, k,
            [&](const Walk& w) {
                const auto pivot = naive_pivot(w);
                if (!pivot || (required_pivot && *pivot != *required_pivot)) {
                    return true;
                }
                if (std::holds_alternative<OutOfBounds>(naive_reflect(w, n))) {
                    found = w;
                    return false;
                }
                return true;
            },
            cap);
    }
    return found;
}

}  // namespace nilpath
