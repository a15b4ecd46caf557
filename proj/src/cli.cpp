#include "nilpath/cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"

#include "nilpath/charpoly.hpp"
#include "nilpath/gf2_matrix.hpp"
#include "nilpath/pathwalks.hpp"
#include "nilpath/proofcheck.hpp"
#include "nilpath/report.hpp"

namespace nilpath::cli {

namespace {

/// Bad arguments that parse fine but violate a command's preconditions.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::int64_t as_param(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::string bit_text(bool b) { return b ? "1" : "0"; }

std::size_t order_from_m(std::int64_t m) {
    if (m < 1 || m > 30) {
        throw UsageError("--m must lie in 1..30");
    }
    return (std::size_t{1} << m) - 1;
}

void require_vertex(std::int64_t v, std::int64_t n, const char* flag) {
    if (v < 1 || v > n) {
        throw UsageError(std::string(flag) + " must lie in 1.." + std::to_string(n));
    }
}

// Entry-wise integer powers of the 0/1 adjacency matrix: powers[k][x-1][y-1].
std::vector<std::vector<std::vector<BigCount>>> integer_adjacency_powers(std::size_t n,
                                                                         std::uint64_t max_k) {
    std::vector<std::vector<BigCount>> power(n, std::vector<BigCount>(n));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
    std::vector<std::vector<std::vector<BigCount>>> out{power};
    for (std::uint64_t k = 1; k <= max_k; ++k) {
        std::vector<std::vector<BigCount>> next(n, std::vector<BigCount>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j > 0) next[i][j] += power[i][j - 1];
                if (j + 1 < n) next[i][j] += power[i][j + 1];
            }
        }
        power = std::move(next);
        out.push_back(power);
    }
    return out;
}

struct Args {
    std::string format = "table";

    std::optional<std::int64_t> m;
    std::optional<std::int64_t> n;
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t k = 0;
    std::int64_t pivot = 0;
    std::int64_t max_k = 0;
    std::int64_t max_m = 12;
    bool exact = false;
    bool parity = false;
    bool all = false;
    bool no_enumerate = false;
    bool check_monomial = false;
};

ParityReport check_nilpotent(const Args& a) {
    const std::size_t n = a.m ? order_from_m(*a.m) : static_cast<std::size_t>(*a.n);
    const PathSpec spec = PathSpec::from_n(n);
    ParityReport r;
    r.command = "check-nilpotent";
    if (spec.m) r.param("m", static_cast<std::int64_t>(*spec.m));
    r.param("n", as_param(n));

    const GF2Matrix adj = path_adjacency(n);
    const GF2Matrix top = mat_pow(adj, n);
    r.check("A^n is the zero matrix", "zero", mat_is_zero(top) ? "zero" : "nonzero",
            "matrix-power");

    const GF2Matrix below = mat_pow(adj, n - 1);
    r.check("entry (1,n) of A^(n-1)", "1", bit_text(below.get(1, n)), "matrix-power");

    const auto index = nilpotency_index(adj);
    r.check("nilpotency index", std::to_string(n), index ? std::to_string(*index) : "none",
            "binary-lifting");
    r.value("walks from 1 to n of length n-1",
            count_walks_exact(n, 1, static_cast<Vertex>(n), n - 1).str());
    return r;
}

ParityReport walk_count(const Args& a) {
    if (a.exact && a.parity) {
        throw UsageError("--exact and --parity are mutually exclusive");
    }
    const auto n = static_cast<std::size_t>(*a.n);
    require_vertex(a.x, *a.n, "--x");
    require_vertex(a.y, *a.n, "--y");
    const auto k = static_cast<std::uint64_t>(a.k);

    ParityReport r;
    r.command = "walk-count";
    r.param("n", *a.n).param("x", a.x).param("y", a.y).param("k", a.k);
    r.param("mode", std::string(a.exact ? "exact" : a.parity ? "parity" : "both"));

    const bool matrix_bit = mat_pow(path_adjacency(n), k).get(a.x, a.y);
    if (!a.exact) {
        const bool dp = count_walks_parity(n, a.x, a.y, k);
        r.check("count parity vs entry of A^k", bit_text(matrix_bit), bit_text(dp),
                "walk-parity-dp");
        r.value("parity", bit_text(dp));
    }
    if (!a.parity) {
        const BigCount exact = count_walks_exact(n, a.x, a.y, k);
        r.check("exact count mod 2 vs entry of A^k", bit_text(matrix_bit),
                bit_text((exact & 1) != 0), "walk-dp");
        if (k <= enumeration_cap()) {
            r.check("exact count vs enumeration",
                    std::to_string(enumerate_walks(n, a.x, a.y, k).size()), exact.str(),
                    "walk-dp");
        }
        r.value("count", exact.str());
    }
    return r;
}

ParityReport verify_lemma(const Args& a) {
    const auto n = static_cast<std::size_t>(*a.n);
    const auto max_k = static_cast<std::uint64_t>(a.max_k);
    if (max_k > enumeration_cap()) {
        throw EnumerationCapExceeded(max_k, enumeration_cap());
    }
    ParityReport r;
    r.command = "verify-lemma";
    r.param("n", *a.n).param("max-k", a.max_k);

    const auto powers = integer_adjacency_powers(n, max_k);
    std::uint64_t triples = 0, mismatches = 0;
    for (std::uint64_t k = 0; k <= max_k; ++k) {
        std::uint64_t agree = 0;
        for (Vertex x = 1; x <= static_cast<Vertex>(n); ++x) {
            const auto row = walk_count_row(n, x, k);
            for (Vertex y = 1; y <= static_cast<Vertex>(n); ++y) {
                const BigCount listed = enumerate_walks(n, x, y, k).size();
                const auto& entry = powers[k][x - 1][y - 1];
                if (listed == row[y - 1] && listed == entry) ++agree;
            }
        }
        triples += n * n;
        mismatches += n * n - agree;
        r.check("k=" + std::to_string(k) + ": enumeration = dp = integer A^k entry",
                std::to_string(n * n), std::to_string(agree), "enumeration");
    }
    r.value("triples", std::to_string(triples)).value("mismatches", std::to_string(mismatches));
    return r;
}

ParityReport verify_theorem(const Args& a) {
    TheoremOptions options;
    options.enumerate_pairing = !a.no_enumerate;

    if (!a.all) {
        if (!a.m) throw UsageError("verify-theorem needs --m (or --all)");
        const std::size_t n = order_from_m(*a.m);
        const auto n_signed = static_cast<std::int64_t>(n);
        if (a.k < n_signed) {
            throw UsageError("--k must be at least n = " + std::to_string(n));
        }
        require_vertex(a.x, n_signed, "--x");
        require_vertex(a.y, n_signed, "--y");
        const auto cert = theorem_check(static_cast<unsigned>(*a.m),
                                        static_cast<std::uint64_t>(a.k), a.x, a.y, options);
        ParityReport r = theorem_report(cert);
        r.param("enumerate-pairing", options.enumerate_pairing);
        return r;
    }

    const std::int64_t max_m = a.m.value_or(4);
    order_from_m(max_m);
    ParityReport r;
    r.command = "verify-theorem";
    r.param("all", true).param("max-m", max_m).param("enumerate-pairing",
                                                      options.enumerate_pairing);
    std::uint64_t instances = 0;
    for (unsigned m = 1; m <= static_cast<unsigned>(max_m); ++m) {
        const std::size_t n = order_from_m(m);
        TheoremChecker checker(options);
        for (std::uint64_t k = n; k <= n + 4; ++k) {
            std::uint64_t passing = 0;
            for (Vertex x = 1; x <= static_cast<Vertex>(n); ++x) {
                for (Vertex y = 1; y <= static_cast<Vertex>(n); ++y) {
                    if (checker.check(m, k, x, y).passed()) ++passing;
                }
            }
            instances += n * n;
            r.check("m=" + std::to_string(m) + " k=" + std::to_string(k) +
                        ": instances with a complete even certificate",
                    std::to_string(n * n), std::to_string(passing), "theorem-check");
        }
    }
    r.value("instances", std::to_string(instances));
    return r;
}

ParityReport involution_test(const Args& a) {
    const std::size_t n = order_from_m(a.m.value());
    const Vertex pivot = Vertex{1} << (*a.m - 1);
    const auto max_len = static_cast<std::uint64_t>(a.k);
    if (max_len > enumeration_cap()) {
        throw EnumerationCapExceeded(max_len, enumeration_cap());
    }
    ParityReport r;
    r.command = "involution-test";
    r.param("m", *a.m).param("n", as_param(n)).param("pivot", pivot).param("k", a.k);

    std::uint64_t total = 0;
    for (std::uint64_t len = 0; len <= max_len; ++len) {
        std::uint64_t checked = 0, violations = 0;
        for (Vertex x = 1; x <= static_cast<Vertex>(n); ++x) {
            for_each_walk(n, x, std::nullopt, len, [&](const Walk& w) {
                const WalkClass cls = classify(w, pivot);
                if (cls.tag != ClassTag::Class3) return true;
                ++checked;
                try {
                    const Walk image = reflect_class3(w, pivot, n);
                    const bool fine = walk_is_valid(n, image) &&
                                      classify(image, pivot).tag == ClassTag::Class3 &&
                                      image.start() == w.start() && image.end() == w.end() &&
                                      image.length() == w.length() && image != w &&
                                      reflect_class3(image, pivot, n) == w;
                    if (!fine) ++violations;
                } catch (const ReflectionOutOfBounds&) {
                    ++violations;
                }
                return true;
            });
        }
        total += checked;
        r.check("length " + std::to_string(len) + ": violations over " + std::to_string(checked) +
                    " class3 walks",
                "0", std::to_string(violations), "reflection-pairing");
    }
    r.value("class3 walks checked", std::to_string(total));
    return r;
}

ParityReport census(const Args& a) {
    const auto n = static_cast<std::size_t>(*a.n);
    require_vertex(a.pivot, *a.n, "--pivot");
    require_vertex(a.x, *a.n, "--x");
    require_vertex(a.y, *a.n, "--y");
    const auto k = static_cast<std::uint64_t>(a.k);

    ParityReport r;
    r.command = "census";
    r.param("n", *a.n).param("pivot", a.pivot).param("x", a.x).param("y", a.y).param("k", a.k);

    const ClassCensus c = class_census(n, a.pivot, a.x, a.y, k);
    r.check("class1 + class2 + class3 = walk count", count_walks_exact(n, a.x, a.y, k).str(),
            c.total().str(), "class-census");
    BigCount step_sum = 0;
    for (const auto& s : c.per_step_c2) step_sum += s;
    r.check("per-step class2 counts sum to class2", c.c2.str(), step_sum.str(), "class-census");

    if (k <= enumeration_cap()) {
        std::map<ClassTag, BigCount> listed{
            {ClassTag::Class1, 0}, {ClassTag::Class2, 0}, {ClassTag::Class3, 0}};
        for (const Walk& w : enumerate_walks(n, a.x, a.y, k)) {
            listed[classify(w, a.pivot).tag] += 1;
        }
        r.check("class1 vs enumeration", listed[ClassTag::Class1].str(), c.c1.str(),
                "class-census");
        r.check("class2 vs enumeration", listed[ClassTag::Class2].str(), c.c2.str(),
                "class-census");
        r.check("class3 vs enumeration", listed[ClassTag::Class3].str(), c.c3.str(),
                "class-census");
    }

    std::string steps;
    for (const auto& s : c.per_step_c2) {
        if (!steps.empty()) steps += ' ';
        steps += s.str();
    }
    r.value("class1", c.c1.str())
        .value("class2", c.c2.str())
        .value("class3", c.c3.str())
        .value("class2 by step", steps);
    return r;
}

ParityReport naive_demo(const Args& a) {
    const auto n = static_cast<std::size_t>(*a.n);
    const auto k = static_cast<std::uint64_t>(a.k);
    ParityReport r;
    r.command = "naive-demo";
    r.param("n", *a.n).param("k", a.k);

    const auto witness = find_naive_failure(n, k);
    r.check("naive reflection fails on some walk", "yes", witness ? "yes" : "no",
            "exhaustive-search");
    if (witness) {
        const auto result = naive_reflect(*witness, n);
        const auto* oob = std::get_if<OutOfBounds>(&result);
        r.check("naive reflection of the witness", "out-of-bounds",
                oob ? "out-of-bounds" : "defined", "naive-reflection");
        r.value("witness", witness->to_string())
            .value("naive pivot", std::to_string(*naive_pivot(*witness)));
        if (oob) {
            r.value("escaping vertex",
                    std::to_string(oob->vertex) + " at step " + std::to_string(oob->step));
        }
    }
    return r;
}

ParityReport charpoly(const Args& a) {
    const auto n = static_cast<std::size_t>(*a.n);
    ParityReport r;
    r.command = "charpoly";
    r.param("n", *a.n).param("check-monomial", a.check_monomial);

    const GF2Poly p = charpoly_path(n);
    const bool monomial = p == GF2Poly::monomial(n);
    r.check("degree", std::to_string(n), p.degree() ? std::to_string(*p.degree()) : "none",
            "charpoly-recurrence");
    if (a.check_monomial) {
        r.check("characteristic polynomial is x^n", "yes", monomial ? "yes" : "no",
                "charpoly-recurrence");
    }
    const bool nilpotent = nilpotency_index(path_adjacency(n)).has_value();
    r.check("monomial iff A is nilpotent", nilpotent ? "yes" : "no", monomial ? "yes" : "no",
            "charpoly-recurrence");
    r.value("polynomial", p.to_string());
    return r;
}

ParityReport bench(const Args& a) {
    if (a.max_m < 1 || a.max_m > 16) {
        throw UsageError("--max-m must lie in 1..16");
    }
    ParityReport r;
    r.command = "bench";
    r.param("max-m", a.max_m);
    for (unsigned m = 1; m <= static_cast<unsigned>(a.max_m); ++m) {
        const std::size_t n = order_from_m(m);
        const GF2Matrix adj = path_adjacency(n);
        const auto start = Clock::now();
        const GF2Matrix top = mat_pow(adj, n);
        const double ms = ms_since(start);
        r.check("m=" + std::to_string(m) + ": A^n is the zero matrix", "zero",
                mat_is_zero(top) ? "zero" : "nonzero", "matrix-power");
        r.value("mat_pow ms, n=" + std::to_string(n), std::to_string(ms));
    }
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verifies nilpotency of path-graph adjacency matrices over GF(2)", "nilpath"};
    app.require_subcommand(1);
    app.fallthrough();

    Args a;
    const std::map<std::string, ReportFormat> formats{
        {"table", ReportFormat::Table}, {"json", ReportFormat::Json}, {"csv", ReportFormat::Csv}};
    app.add_option("--format", a.format, "Report format")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    const auto positive = CLI::Range(std::int64_t{1}, std::int64_t{1} << 40);
    const auto non_negative = CLI::Range(std::int64_t{0}, std::int64_t{1} << 40);

    auto* nil = app.add_subcommand("check-nilpotent", "Check A^n = 0 and the nilpotency index");
    auto* nil_m = nil->add_option("--m", a.m, "n = 2^m - 1")->check(positive);
    auto* nil_n = nil->add_option("--n", a.n, "Vertex count")->check(positive);
    nil_m->excludes(nil_n);
    nil->require_option(1);

    auto* wc = app.add_subcommand("walk-count", "Count walks of length k from x to y");
    wc->add_option("--n", a.n)->required()->check(positive);
    wc->add_option("--x", a.x)->required()->check(positive);
    wc->add_option("--y", a.y)->required()->check(positive);
    wc->add_option("--k", a.k)->required()->check(non_negative);
    wc->add_flag("--exact", a.exact, "Exact count only");
    wc->add_flag("--parity", a.parity, "Parity only");

    auto* lemma = app.add_subcommand("verify-lemma", "Enumeration vs dp vs integer matrix powers");
    lemma->add_option("--n", a.n)->required()->check(positive);
    lemma->add_option("--max-k", a.max_k)->required()->check(non_negative);

    auto* thm = app.add_subcommand("verify-theorem", "Certify that walk counts with k >= n are even");
    thm->add_option("--m", a.m)->check(positive);
    auto* thm_k = thm->add_option("--k", a.k)->check(non_negative);
    auto* thm_x = thm->add_option("--x", a.x)->check(positive);
    auto* thm_y = thm->add_option("--y", a.y)->check(positive);
    auto* thm_all = thm->add_flag("--all", a.all, "Sweep m' <= m (default 4), n <= k <= n+4, all x, y");
    thm->add_flag("--no-enumerate", a.no_enumerate, "Certify the reflection pairing by counting only");
    thm_all->excludes(thm_k)->excludes(thm_x)->excludes(thm_y);

    auto* inv = app.add_subcommand("involution-test", "Check the midpoint reflection on every class3 walk");
    inv->add_option("--m", a.m)->required()->check(positive);
    inv->add_option("--k", a.k, "Largest walk length")->required()->check(non_negative);

    auto* cen = app.add_subcommand("census", "Class sizes around a pivot");
    cen->add_option("--n", a.n)->required()->check(positive);
    cen->add_option("--pivot", a.pivot)->required()->check(positive);
    cen->add_option("--x", a.x)->required()->check(positive);
    cen->add_option("--y", a.y)->required()->check(positive);
    cen->add_option("--k", a.k)->required()->check(non_negative);

    auto* naive = app.add_subcommand("naive-demo", "Find a walk where the naive reflection escapes");
    naive->add_option("--n", a.n)->required()->check(positive);
    naive->add_option("--k", a.k)->required()->check(non_negative);

    auto* cp = app.add_subcommand("charpoly", "Characteristic polynomial of A over GF(2)");
    cp->add_option("--n", a.n)->required()->check(positive);
    cp->add_flag("--check-monomial", a.check_monomial);

    auto* bn = app.add_subcommand("bench", "Time mat_pow(A, n) for n = 2^m - 1");
    bn->add_option("--max-m", a.max_m)->check(positive);

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "nilpath: " << e.what() << '\n';
        return exit_usage;
    }

    const auto start = Clock::now();
    ParityReport report;
    try {
        if (nil->parsed()) {
            report = check_nilpotent(a);
        } else if (wc->parsed()) {
            report = walk_count(a);
        } else if (lemma->parsed()) {
            report = verify_lemma(a);
        } else if (thm->parsed()) {
            report = verify_theorem(a);
        } else if (inv->parsed()) {
            report = involution_test(a);
        } else if (cen->parsed()) {
            report = census(a);
        } else if (naive->parsed()) {
            report = naive_demo(a);
        } else if (cp->parsed()) {
            report = charpoly(a);
        } else {
            report = bench(a);
        }
    } catch (const UsageError& e) {
        err << "nilpath: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "nilpath: " << e.what() << '\n';
        return exit_usage;
    } catch (const EnumerationCapExceeded& e) {
        err << "nilpath: " << e.what() << '\n';
        return exit_usage;
    }
    report.elapsed_ms = ms_since(start);

    write_report(out, report, formats.at(a.format));
    return report.passed() ? exit_pass : exit_fail;
}

}  // namespace nilpath::cli
