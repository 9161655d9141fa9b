#pragma once

// Named checks. Each one recomputes the same count along independent routes
// (series coefficients, explicit enumeration, injection complements) and
// records one witness row per n and statement.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rrbeck/bijections.hpp"
#include "rrbeck/genfun.hpp"
#include "rrbeck/partition.hpp"
#include "rrbeck/series.hpp"

namespace rrbeck {

enum class CheckStatus { Pass, Fail, DiagnosticDiscrepancy };

inline std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::DiagnosticDiscrepancy: return "diagnostic-discrepancy";
    }
    return "?";
}

struct Witness {
    int n = 0;
    std::string label;
    BigInt expected;
    BigInt actual;
    std::vector<std::pair<std::string, BigInt>> routes;
    bool ok = true;
    std::optional<std::string> counterexample;
    std::optional<std::string> note;

    bool operator==(const Witness&) const = default;
};

/// A mismatch against a printed formula. Never a failure.
struct Diagnostic {
    int n = 0;
    std::string kind;
    std::string object;
    std::string reason;

    bool operator==(const Diagnostic&) const = default;
};

struct CheckResult {
    std::string check_name;
    int n_min = 0;
    int n_max = 0;
    CheckStatus status = CheckStatus::Pass;
    std::vector<Witness> witnesses;
    std::vector<Diagnostic> diagnostics;

    /// Smallest-n failing witness, if any.
    std::optional<Witness> first_failure() const
    {
        for (const auto& w : witnesses) {
            if (!w.ok)
                return w;
        }
        return std::nullopt;
    }

    bool operator==(const CheckResult&) const = default;
};

namespace detail {

// expected = first route; actual = first disagreeing route, else the last one.
inline Witness route_witness(int n, std::string label,
                             std::vector<std::pair<std::string, BigInt>> routes)
{
    Witness w;
    w.n = n;
    w.label = std::move(label);
    w.expected = routes.front().second;
    w.actual = routes.back().second;
    for (const auto& r : routes) {
        if (r.second != w.expected) {
            w.actual = r.second;
            w.ok = false;
            break;
        }
    }
    w.routes = std::move(routes);
    return w;
}

inline CheckResult finish(std::string name, int n_min, int n_max, std::vector<Witness> witnesses,
                          std::vector<Diagnostic> diagnostics = {})
{
    CheckResult r{std::move(name), n_min, n_max, CheckStatus::Pass, std::move(witnesses),
                  std::move(diagnostics)};
    std::stable_sort(r.witnesses.begin(), r.witnesses.end(),
                     [](const Witness& a, const Witness& b) { return a.n < b.n; });
    if (r.first_failure())
        r.status = CheckStatus::Fail;
    else if (!r.diagnostics.empty())
        r.status = CheckStatus::DiagnosticDiscrepancy;
    return r;
}

inline BigInt count(std::size_t v) { return BigInt{v}; }

inline std::size_t series_order(int max_n) { return static_cast<std::size_t>(std::max(max_n, 0)); }

} // namespace detail

// ---------------------------------------------------------------------------
// Counting helpers shared by checks and tables

/// Number of parts equal to 1 over all partitions of n in the class.
inline long total_ones(int n, PartitionClass cls)
{
    long total = 0;
    for (const auto& p : enumerate(n, cls))
        total += static_cast<long>(p.multiplicity(1));
    return total;
}

/// The pairs counted by the first identity, straight from its statement:
/// lambda super-distinct of n - ab, a = +-1 mod 5, b >= 1, and when a = 1 at
/// least one of b-1, b, b+1 is a part of lambda.
inline std::vector<RectPair> theorem1_pairs(int n)
{
    std::vector<RectPair> out;
    for (Part a = 1; a <= n; ++a) {
        if (a % 5 != 1 && a % 5 != 4)
            continue;
        for (int b = 1; a * b <= n; ++b) {
            for (auto& lambda : enumerate(n - a * b, PartitionClass::SuperDistinct)) {
                if (a == 1 && !lambda.contains(b - 1) && !lambda.contains(b) && !lambda.contains(b + 1))
                    continue;
                out.push_back(RectPair{std::move(lambda), a, b});
            }
        }
    }
    return out;
}

/// Brute-force count of pairs (lambda, (1^b)) |- n, lambda super-distinct,
/// split by which of b-1, b, b+1 occur: case 1 only b-1, case 2 only b+1,
/// case 3 both b-1 and b+1, case 4 b itself.
inline long a1_case_count(int n, int which)
{
    long total = 0;
    for (int b = 1; b <= n; ++b) {
        for (const auto& lambda : enumerate(n - b, PartitionClass::SuperDistinct)) {
            const bool below = lambda.contains(b - 1);
            const bool above = lambda.contains(b + 1);
            const bool at = lambda.contains(b);
            switch (which) {
            case 1: total += below && !above; break;
            case 2: total += above && !below; break;
            case 3: total += below && above; break;
            case 4: total += at; break;
            }
        }
    }
    return total;
}

/// Brute-force count of pairs (lambda, (a^b)) |- n, lambda super-distinct,
/// a = +-1 mod 5, a > 1.
inline long case5_count(int n)
{
    long total = 0;
    for (Part a = 2; a <= n; ++a) {
        if (!is_mod5_pm1(a))
            continue;
        for (int b = 1; a * b <= n; ++b)
            total += static_cast<long>(enumerate(n - a * b, PartitionClass::SuperDistinct).size());
    }
    return total;
}

// ---------------------------------------------------------------------------
// Checks

/// Both Rogers-Ramanujan identities: sum side, product side and (for n up to
/// enumeration_limit) the two partition counts.
inline CheckResult check_rr_identities(int max_n, std::optional<int> enumeration_limit = std::nullopt)
{
    const auto order = detail::series_order(max_n);
    const int limit = enumeration_limit.value_or(max_n);
    const auto s1 = rr1_sum_side(order), p1 = rr1_product_side(order);
    const auto s2 = rr2_sum_side(order), p2 = rr2_product_side(order);
    std::vector<Witness> ws;
    for (int n = 0; n <= max_n; ++n) {
        const auto i = static_cast<std::size_t>(n);
        std::vector<std::pair<std::string, BigInt>> r1{{"sum", s1[i]}, {"product", p1[i]}};
        std::vector<std::pair<std::string, BigInt>> r2{{"sum", s2[i]}, {"product", p2[i]}};
        if (n <= limit) {
            r1.emplace_back("mod5_pm1", detail::count(enumerate(n, PartitionClass::Mod5Pm1).size()));
            r1.emplace_back("super_distinct", detail::count(enumerate(n, PartitionClass::SuperDistinct).size()));
            r2.emplace_back("mod5_pm2", detail::count(enumerate(n, PartitionClass::Mod5Pm2).size()));
            r2.emplace_back("super_distinct_gt1",
                            detail::count(enumerate(n, PartitionClass::SuperDistinctGt1).size()));
        }
        ws.push_back(detail::route_witness(n, "rr1", std::move(r1)));
        ws.push_back(detail::route_witness(n, "rr2", std::move(r2)));
    }
    return detail::finish("rr", 0, max_n, std::move(ws));
}

/// Excess of parts (odd-part partitions over distinct-part partitions) against
/// partitions with exactly one even value and with exactly one repeated value.
inline CheckResult check_beck_euler(int max_n)
{
    std::vector<Witness> ws;
    for (int n = 0; n <= max_n; ++n) {
        const long excess = total_parts(n, PartitionClass::OddParts) - total_parts(n, PartitionClass::Distinct);
        ws.push_back(detail::route_witness(
            n, "beck",
            {{"excess", excess},
             {"one_even_part", detail::count(enumerate(n, PartitionClass::ExactlyOneEvenPart).size())},
             {"one_repeated_part",
              detail::count(enumerate(n, PartitionClass::ExactlyOneRepeatedPart).size())}}));
    }
    return detail::finish("beck-euler", 0, max_n, std::move(ws));
}

/// The same excess as pair counts: (odd lambda, even a) and (distinct lambda, a not in lambda, b >= 2).
inline CheckResult check_beck_pair_form(int max_n)
{
    std::vector<Witness> ws;
    for (int n = 0; n <= max_n; ++n) {
        const long excess = total_parts(n, PartitionClass::OddParts) - total_parts(n, PartitionClass::Distinct);
        const auto odd_even = enumerate_rect_pairs(n, PartitionClass::OddParts,
                                                   [](Part a, int) { return a % 2 == 0; });
        const auto distinct = enumerate_rect_pairs(n, PartitionClass::Distinct,
                                                   [](Part, int b) { return b >= 2; });
        const auto absent = std::count_if(distinct.begin(), distinct.end(),
                                          [](const RectPair& p) { return !p.lambda.contains(p.a); });
        ws.push_back(detail::route_witness(n, "beck-pairs",
                                           {{"excess", excess},
                                            {"odd_lambda_even_a", detail::count(odd_even.size())},
                                            {"distinct_lambda_b_ge_2", detail::count(static_cast<std::size_t>(absent))}}));
    }
    return detail::finish("beck-pair", 0, max_n, std::move(ws));
}

/// First identity: series T1 - T2, enumeration excess, and the pair count.
inline CheckResult check_theorem1(int max_n)
{
    const auto order = detail::series_order(max_n);
    const auto t1 = t1_series(order);
    const auto t2 = t2_series(order);
    std::vector<Witness> ws;
    for (int n = 0; n <= max_n; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const long pm1 = total_parts(n, PartitionClass::Mod5Pm1);
        const long sd = total_parts(n, PartitionClass::SuperDistinct);
        ws.push_back(detail::route_witness(n, "t1", {{"series", t1[i]}, {"enumeration", pm1}}));
        ws.push_back(detail::route_witness(n, "t2", {{"series", t2[i]}, {"enumeration", sd}}));
        ws.push_back(detail::route_witness(n, "excess",
                                           {{"series", t1[i] - t2[i]},
                                            {"enumeration", pm1 - sd},
                                            {"pairs", detail::count(theorem1_pairs(n).size())}}));
    }
    return detail::finish("theorem1", 0, max_n, std::move(ws));
}

/// Case-by-case closed forms against brute force for n <= max_n, and the
/// series identities sum(cases 1-4) = q/(1-q) R1 - T2 and
/// sum(cases 1-5) = T1 - T2 up to series_order.
inline CheckResult check_theorem1_cases(int max_n, std::optional<int> series_order = std::nullopt)
{
    const int top = std::max(max_n, series_order.value_or(max_n));
    const auto order = detail::series_order(top);
    std::vector<TruncatedSeries> closed;
    for (int c = 1; c <= 4; ++c)
        closed.push_back(case_closed_form(c, order));
    const auto c5 = case5_series(order);
    const auto telescoped = cases_1to4_telescoped(order);
    const auto diff = t1_series(order) - t2_series(order);

    std::vector<Witness> ws;
    for (int n = 0; n <= top; ++n) {
        const auto i = static_cast<std::size_t>(n);
        if (n <= max_n) {
            for (int c = 1; c <= 4; ++c)
                ws.push_back(detail::route_witness(n, "case" + std::to_string(c),
                                                   {{"closed_form", closed[c - 1][i]},
                                                    {"brute_force", a1_case_count(n, c)}}));
            ws.push_back(detail::route_witness(n, "case5", {{"series", c5[i]}, {"brute_force", case5_count(n)}}));
        }
        BigInt sum14 = 0;
        for (const auto& s : closed)
            sum14 += s[i];
        ws.push_back(detail::route_witness(n, "telescoped", {{"cases1-4", sum14}, {"q/(1-q)R1-T2", telescoped[i]}}));
        ws.push_back(detail::route_witness(n, "cases-total", {{"cases1-5", sum14 + c5[i]}, {"T1-T2", diff[i]}}));
    }
    return detail::finish("theorem1-cases", 0, top, std::move(ws));
}

/// phi: injective, inverse on its image, and image = pairs with a = 1 and
/// none of b-1, b, b+1 in lambda.
inline CheckResult check_phi(int max_n)
{
    std::vector<Witness> ws;
    for (int n = 0; n <= max_n; ++n) {
        const auto domain = t2_set(n);
        std::set<RectPair> image;
        std::optional<std::string> counterexample;
        for (const auto& mu : domain) {
            const auto p = phi(mu);
            if (!in_t1(p) || p.size() != n)
                counterexample = counterexample.value_or("phi" + to_string(mu) + " = " + to_string(p) + " leaves T1(n)");
            if (phi_inverse(p) != mu)
                counterexample = counterexample.value_or("phi_inverse does not undo phi at " + to_string(mu));
            image.insert(p);
        }
        std::set<RectPair> members;
        for (const auto& p : t1_set(n)) {
            if (phi_image_member(p))
                members.insert(p);
        }
        if (image != members && !counterexample) {
            std::vector<RectPair> diff;
            std::set_symmetric_difference(image.begin(), image.end(), members.begin(), members.end(),
                                          std::back_inserter(diff));
            counterexample = "image and membership predicate disagree at " + to_string(diff.front());
        }
        auto w = detail::route_witness(n, "phi",
                                       {{"marked", detail::count(domain.size())},
                                        {"distinct_images", detail::count(image.size())},
                                        {"image_members", detail::count(members.size())}});
        if (counterexample) {
            w.ok = false;
            w.counterexample = counterexample;
        }
        ws.push_back(std::move(w));
    }
    return detail::finish("phi", 0, max_n, std::move(ws));
}

/// Parts in super-distinct partitions <= ones in partitions into parts +-1 mod 5.
inline CheckResult check_corollary(int max_n)
{
    std::vector<Witness> ws;
    for (int n = 1; n <= max_n; ++n) {
        Witness w;
        w.n = n;
        w.label = "corollary";
        w.expected = total_parts(n, PartitionClass::SuperDistinct);
        w.actual = total_ones(n, PartitionClass::Mod5Pm1);
        w.routes = {{"parts_super_distinct", w.expected}, {"ones_mod5_pm1", w.actual}};
        w.ok = w.expected <= w.actual;
        w.note = w.expected == w.actual ? "equality" : w.ok ? "strict" : "violated";
        ws.push_back(std::move(w));
    }
    return detail::finish("corollary", 1, max_n, std::move(ws));
}

/// Second identity: series S1 - S2, enumeration excess, |S1| - |psi(S2)| and |S(n)|.
inline CheckResult check_theorem2(int max_n)
{
    const auto order = detail::series_order(max_n);
    const auto s1 = s1_series(order);
    const auto s2 = s2_series(order);
    std::vector<Witness> ws;
    for (int n = 1; n <= max_n; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const long pm2 = total_parts(n, PartitionClass::Mod5Pm2);
        const long sd = total_parts(n, PartitionClass::SuperDistinctGt1);
        const auto codomain = s1_set(n);
        std::set<RectPair> image;
        for (const auto& mu : s2_set(n))
            image.insert(psi(mu).pair);
        ws.push_back(detail::route_witness(
            n, "s1", {{"series", s1[i]}, {"enumeration", pm2}, {"pairs", detail::count(codomain.size())}}));
        ws.push_back(detail::route_witness(n, "s2", {{"series", s2[i]}, {"enumeration", sd}}));
        ws.push_back(detail::route_witness(
            n, "excess",
            {{"series", s1[i] - s2[i]},
             {"enumeration", pm2 - sd},
             {"injection", BigInt{codomain.size()} - BigInt{image.size()}},
             {"s_set", detail::count(s_set(n).size())}}));
    }
    return detail::finish("theorem2", 1, max_n, std::move(ws));
}

/// psi: injective, size preserving, lands in S1(n), labels disjoint.
/// The printed I_j formulas are compared against psi's labels as diagnostics:
///   forward    psi output labelled I_j fails the printed I_j
///   overlap    psi output also satisfies another printed I_j'
///   complement a pair outside the image satisfies some printed I_j
inline CheckResult check_psi(int max_n)
{
    std::vector<Witness> ws;
    std::vector<Diagnostic> diags;
    for (int n = 1; n <= max_n; ++n) {
        const auto domain = s2_set(n);
        std::map<RectPair, std::pair<MarkedPartition, ImageClassLabel>> image;
        std::optional<std::string> counterexample;
        for (const auto& mu : domain) {
            const auto r = psi(mu);
            const std::string shown = to_string(mu) + " -> " + to_string(r.pair);
            if (r.pair.size() != n)
                counterexample = counterexample.value_or("size not preserved: " + shown);
            if (!in_s1(r.pair))
                counterexample = counterexample.value_or("outside S1(n): " + shown);
            const auto [it, fresh] = image.try_emplace(r.pair, mu, r.label);
            if (!fresh) {
                const bool same_label = it->second.second == r.label;
                counterexample = counterexample.value_or(
                    std::string(same_label ? "not injective: " : "labels overlap: ") + to_string(it->second.first) +
                    " and " + shown);
            }
            if (auto why = image_class_violation(r.pair, r.label))
                diags.push_back({n, "forward " + to_string(r.label), shown, *why});
            for (auto other : kImageClasses) {
                if (other != r.label && image_class_member(r.pair, other))
                    diags.push_back({n, "overlap " + to_string(r.label) + "/" + to_string(other), shown,
                                     "also satisfies the printed " + to_string(other)});
            }
        }
        for (const auto& p : s1_set(n)) {
            if (image.contains(p))
                continue;
            if (auto why = image_class_violation(p, ImageClassLabel::Complement))
                diags.push_back({n, "complement", to_string(p), *why});
        }
        auto w = detail::route_witness(n, "psi",
                                       {{"marked", detail::count(domain.size())},
                                        {"distinct_images", detail::count(image.size())}});
        if (counterexample) {
            w.ok = false;
            w.counterexample = counterexample;
        }
        ws.push_back(std::move(w));
    }
    return detail::finish("psi", 1, max_n, std::move(ws), std::move(diags));
}

/// The first input (smallest n, then enumeration order) reaching each leaf of
/// the psi case ladder.
inline std::map<PsiBranch, MarkedPartition> psi_branch_coverage(int max_n)
{
    std::map<PsiBranch, MarkedPartition> hit;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& mu : s2_set(n))
            hit.try_emplace(psi(mu).branch, mu);
    }
    return hit;
}

inline const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names{
        "rr", "beck-euler", "beck-pair", "theorem1", "theorem1-cases", "phi", "corollary", "theorem2", "psi",
    };
    return names;
}

/// Runs a check by name; nullopt for an unknown name.
inline std::optional<CheckResult> run_check(const std::string& name, int max_n)
{
    static const std::map<std::string, std::function<CheckResult(int)>> table{
        {"rr", [](int n) { return check_rr_identities(n); }},
        {"beck-euler", check_beck_euler},
        {"beck-pair", check_beck_pair_form},
        {"theorem1", check_theorem1},
        {"theorem1-cases", [](int n) { return check_theorem1_cases(n); }},
        {"phi", check_phi},
        {"corollary", check_corollary},
        {"theorem2", check_theorem2},
        {"psi", check_psi},
    };
    const auto it = table.find(name);
    if (it == table.end())
        return std::nullopt;
    return it->second(max_n);
}

// ---------------------------------------------------------------------------
// Per-n tables

enum class TableKind { Rr1Beck, Rr2Beck, BeckEuler, Corollary };

struct TableRow {
    int n = 0;
    BigInt lhs;
    BigInt rhs;
    BigInt excess;
    bool match = false;
    bool operator==(const TableRow&) const = default;
};

/// Rows for n = 1..max_n.
///   rr1-beck   lhs parts(+-1 mod 5), rhs parts(super-distinct), match: excess = pair count
///   rr2-beck   lhs parts(+-2 mod 5), rhs parts(super-distinct > 1), match: excess = |S(n)|
///   beck-euler lhs parts(odd), rhs parts(distinct), match: excess = one-even = one-repeated
///   corollary  lhs parts(super-distinct), rhs ones(+-1 mod 5), excess = rhs - lhs, match: excess >= 0
inline std::vector<TableRow> theorem_table(TableKind kind, int max_n)
{
    std::vector<TableRow> rows;
    for (int n = 1; n <= max_n; ++n) {
        TableRow row;
        row.n = n;
        switch (kind) {
        case TableKind::Rr1Beck:
            row.lhs = total_parts(n, PartitionClass::Mod5Pm1);
            row.rhs = total_parts(n, PartitionClass::SuperDistinct);
            row.excess = row.lhs - row.rhs;
            row.match = row.excess == theorem1_pairs(n).size();
            break;
        case TableKind::Rr2Beck:
            row.lhs = total_parts(n, PartitionClass::Mod5Pm2);
            row.rhs = total_parts(n, PartitionClass::SuperDistinctGt1);
            row.excess = row.lhs - row.rhs;
            row.match = row.excess == s_set(n).size();
            break;
        case TableKind::BeckEuler:
            row.lhs = total_parts(n, PartitionClass::OddParts);
            row.rhs = total_parts(n, PartitionClass::Distinct);
            row.excess = row.lhs - row.rhs;
            row.match = row.excess == enumerate(n, PartitionClass::ExactlyOneEvenPart).size() &&
                        row.excess == enumerate(n, PartitionClass::ExactlyOneRepeatedPart).size();
            break;
        case TableKind::Corollary:
            row.lhs = total_parts(n, PartitionClass::SuperDistinct);
            row.rhs = total_ones(n, PartitionClass::Mod5Pm1);
            row.excess = row.rhs - row.lhs;
            row.match = row.excess >= 0;
            break;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace rrbeck
