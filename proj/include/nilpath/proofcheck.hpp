#pragma once

// Executable version of the parity argument for walks in P_n, n = 2^m - 1:
// walks are split around the midpoint pivot 2^(m-1) by how often they visit
// it, and each of the three classes is shown to have even size.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <variant>
#include <vector>

#include "nilpath/pathwalks.hpp"
#include "nilpath/report.hpp"

namespace nilpath {

enum class ClassTag { Class1, Class2, Class3 };

const char* to_string(ClassTag tag) noexcept;

/// Class1: pivot never visited; Class2: exactly once; Class3: twice or more.
struct WalkClass {
    ClassTag tag;
    std::size_t pivot_visits;

    bool operator==(const WalkClass&) const = default;
};

/// Counts every position of w (endpoints included) that equals pivot.
/// Throws std::invalid_argument if w has a step other than +-1 or a vertex < 1.
WalkClass classify(const Walk& w, Vertex pivot);

/// A Class2 walk cut at its unique pivot visit.
struct Class2Split {
    std::size_t step;           ///< index i with w[i] == pivot
    std::optional<Walk> left;   ///< w[0..i-1], absent when i == 0
    std::optional<Walk> right;  ///< w[i+1..k], absent when i == k
};

/// Throws std::invalid_argument unless classify(w, pivot) is Class2.
Class2Split class2_decompose(const Walk& w, Vertex pivot);

/// left + pivot + right.
Walk splice(const Class2Split& split, Vertex pivot);

/// Where a reflected vertex left 1..n.
struct OutOfBounds {
    std::size_t step;
    Vertex vertex;

    bool operator==(const OutOfBounds&) const = default;
};

class ReflectionOutOfBounds : public std::out_of_range {
public:
    explicit ReflectionOutOfBounds(OutOfBounds where);
    const OutOfBounds& where() const noexcept { return where_; }

private:
    OutOfBounds where_;
};

/**
 * Reflects the segment strictly between the first two visits of pivot with
 * v -> 2*pivot - v. Throws std::invalid_argument if w is not Class3 for
 * pivot, ReflectionOutOfBounds if a reflected vertex leaves 1..n.
 */
Walk reflect_class3(const Walk& w, Vertex pivot, std::size_t n);

/// Exact class sizes for the walks of length k from x to y.
struct ClassCensus {
    BigCount c1;
    BigCount c2;
    BigCount c3;
    /// per_step_c2[i]: Class2 walks whose pivot visit is at step i, i in 0..k.
    std::vector<BigCount> per_step_c2;

    BigCount total() const { return c1 + c2 + c3; }
};

ClassCensus class_census(std::size_t n, Vertex pivot, Vertex x, Vertex y, std::uint64_t k);

/// A parity claim about walks in the half graph P_{2^(m)-1}, in its own labels.
struct HalfQuery {
    unsigned m;
    std::uint64_t k;
    Vertex x;
    Vertex y;

    auto operator<=>(const HalfQuery&) const = default;
};

enum class Class1Basis { EndpointIsPivot, OppositeSides, HalfGraphRecursion };
enum class Class2Basis { Empty, LeftRecursion, RightRecursion };
enum class Class3Basis { EnumeratedPairing, CountedPairing };

struct Class1Certificate {
    Class1Basis basis;
    std::optional<HalfQuery> query;
    bool holds;
};

struct Class2StepCertificate {
    std::size_t step;
    Class2Basis basis;
    std::optional<HalfQuery> query;
    bool holds;
};

struct Class3Certificate {
    Class3Basis basis;
    /// Class3 walks whose first excursion away from the pivot goes left / right.
    BigCount left_first;
    BigCount right_first;
    /// Walks checked one by one; zero for the counted basis.
    std::uint64_t walks_checked = 0;
    std::uint64_t violations = 0;
    bool holds;
};

/// Full certificate for one (m, k, x, y) instance.
struct TheoremCertificate {
    unsigned m;
    std::size_t n;
    std::uint64_t k;
    Vertex x;
    Vertex y;
    bool base_case = false;
    std::optional<Class1Certificate> class1;
    std::vector<Class2StepCertificate> class2;
    std::optional<Class3Certificate> class3;
    /// Cross-check: parity of the walk count from the GF(2) recurrence.
    bool dp_parity;
    /// Cross-check: census class sizes (absent in the base case).
    std::optional<ClassCensus> census;

    /// Structural verdict: every class certified even.
    bool structurally_even() const;
    /// Structural verdict agrees with dp_parity == 0 and census parities.
    bool passed() const;
};

struct TheoremOptions {
    /// Check the Class3 pairing walk by walk when k is within the cap.
    bool enumerate_pairing = true;
    std::uint64_t enumeration_cap = nilpath::enumeration_cap();
};

/**
 * Verifies that the number of walks of length k from x to y in P_{2^m - 1}
 * is even, following the class argument: Class1 recurses into the half
 * graph holding both endpoints, each Class2 step recurses on a subwalk side
 * of length at least 2^(m-1) - 1, Class3 is paired by reflect_class3.
 *
 * Recursive sub-verdicts are memoized per checker instance.
 */
class TheoremChecker {
public:
    explicit TheoremChecker(TheoremOptions options = {});

    /// Throws std::invalid_argument for m = 0, k < n, or x, y outside 1..n.
    TheoremCertificate check(unsigned m, std::uint64_t k, Vertex x, Vertex y);

    /// Memoized structural verdict for a sub-instance.
    bool holds(const HalfQuery& q);

    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    Class1Certificate certify_class1(unsigned m, std::uint64_t k, Vertex x, Vertex y);
    std::vector<Class2StepCertificate> certify_class2(unsigned m, std::uint64_t k, Vertex x,
                                                      Vertex y);
    Class3Certificate certify_class3(unsigned m, std::uint64_t k, Vertex x, Vertex y,
                                     bool enumerate);

    TheoremOptions options_;
    std::map<HalfQuery, bool> memo_;
};

TheoremCertificate theorem_check(unsigned m, std::uint64_t k, Vertex x, Vertex y,
                                 TheoremOptions options = {});

ParityReport theorem_report(const TheoremCertificate& cert);

/// Among vertices visited at least twice, one of maximal 2-adic valuation;
/// ties go to the earliest second visit, then the earliest first visit.
std::optional<Vertex> naive_pivot(const Walk& w);

using NaiveReflection = std::variant<Walk, OutOfBounds>;

/// Reflection at naive_pivot(w). Throws std::invalid_argument if no vertex repeats.
NaiveReflection naive_reflect(const Walk& w, std::size_t n);

/**
 * Lexicographically first walk of length k in P_n, over all endpoints, on
 * which naive_reflect falls outside 1..n. With required_pivot set, only
 * walks whose naive pivot equals it are considered.
 */
std::optional<Walk> find_naive_failure(std::size_t n, std::uint64_t k,
                                       std::optional<Vertex> required_pivot = std::nullopt,
                                       std::uint64_t cap = enumeration_cap());

}  // namespace nilpath
