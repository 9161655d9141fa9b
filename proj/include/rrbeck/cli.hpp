#pragma once

// Command-line front end: argument parsing and rendering of check results,
// series coefficients, tables and S(n) in human, CSV or JSON form.
//
// Exit status: 0 all correctness checks pass, 1 a correctness failure,
// 2 usage error. Diagnostics go to the error stream and never change it.

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rrbeck/bijections.hpp"
#include "rrbeck/genfun.hpp"
#include "rrbeck/verify.hpp"

namespace rrbeck::cli {

inline constexpr const char* kOrderEnvVar = "RRBECK_ORDER";
inline constexpr std::size_t kDefaultOrder = 200;
inline constexpr int kDefaultMaxN = 40;

enum class Command { Verify, Series, Table, SSet };
enum class Format { Human, Csv, Json };

struct RunConfig {
    Command command = Command::Verify;
    int max_n = kDefaultMaxN;
    std::size_t order = kDefaultOrder;
    std::string selector = "all";  // check, series or table name
    int n = 0;                     // sset only
    Format format = Format::Human;
    std::optional<std::string> output;
};

/// Default series order: RRBECK_ORDER if set to a non-negative integer, else 200.
inline std::size_t default_order_from_env()
{
    const char* v = std::getenv(kOrderEnvVar);
    if (!v || !*v)
        return kDefaultOrder;
    try {
        std::size_t used = 0;
        const long long parsed = std::stoll(v, &used);
        if (used == std::string(v).size() && parsed >= 0)
            return static_cast<std::size_t>(parsed);
    } catch (const std::exception&) {
    }
    return kDefaultOrder;
}

inline const std::map<std::string, std::function<TruncatedSeries(std::size_t)>>& series_builders()
{
    static const std::map<std::string, std::function<TruncatedSeries(std::size_t)>> builders{
        {"rr1_sum", rr1_sum_side},
        {"rr1_prod", rr1_product_side},
        {"rr2_sum", rr2_sum_side},
        {"rr2_prod", rr2_product_side},
        {"t1", t1_series},
        {"t2", t2_series},
        {"s1", s1_series},
        {"s2", s2_series},
        {"case1", [](std::size_t o) { return case_closed_form(1, o); }},
        {"case2", [](std::size_t o) { return case_closed_form(2, o); }},
        {"case3", [](std::size_t o) { return case_closed_form(3, o); }},
        {"case4", [](std::size_t o) { return case_closed_form(4, o); }},
        {"case5", case5_series},
    };
    return builders;
}

inline const std::map<std::string, TableKind>& table_kinds()
{
    static const std::map<std::string, TableKind> kinds{
        {"rr1-beck", TableKind::Rr1Beck},
        {"rr2-beck", TableKind::Rr2Beck},
        {"beck-euler", TableKind::BeckEuler},
        {"corollary", TableKind::Corollary},
    };
    return kinds;
}

/// Parsed configuration, or the exit status to return immediately
/// (0 after --help, 2 on a usage error).
inline std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::size_t default_order,
                                               std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    cfg.order = default_order;

    CLI::App app{"Exact verification of part-count companions to the Rogers-Ramanujan identities",
                 "rrbeck"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{
        {"human", Format::Human}, {"csv", Format::Csv}, {"json", Format::Json}};
    std::string output;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--output,-o", output, "Write to this file instead of standard output");
    };

    std::vector<std::string> check_choices = check_names();
    check_choices.push_back("all");
    auto* verify = app.add_subcommand("verify", "Run identity checks");
    verify->add_option("--check", cfg.selector, "Check to run")->check(CLI::IsMember(check_choices));
    verify->add_option("--max-n", cfg.max_n, "Largest n")->check(CLI::NonNegativeNumber);
    add_common(verify);

    std::vector<std::string> series_names;
    for (const auto& [name, _] : series_builders())
        series_names.push_back(name);
    auto* series = app.add_subcommand("series", "Print series coefficients 0..order");
    series->add_option("--name", cfg.selector, "Series name")->required()->check(CLI::IsMember(series_names));
    series->add_option("--order", cfg.order, "Truncation order");
    add_common(series);

    std::vector<std::string> table_names;
    for (const auto& [name, _] : table_kinds())
        table_names.push_back(name);
    auto* table = app.add_subcommand("table", "Per-n part-count table");
    table->add_option("--theorem", cfg.selector, "Table name")->required()->check(CLI::IsMember(table_names));
    table->add_option("--max-n", cfg.max_n, "Largest n")->check(CLI::NonNegativeNumber);
    add_common(table);

    auto* sset = app.add_subcommand("sset", "List the pairs of S(n)");
    sset->add_option("--n", cfg.n, "n")->required()->check(CLI::PositiveNumber);
    add_common(sset);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (verify->parsed())
        cfg.command = Command::Verify;
    else if (series->parsed())
        cfg.command = Command::Series;
    else if (table->parsed())
        cfg.command = Command::Table;
    else
        cfg.command = Command::SSet;
    if (!output.empty())
        cfg.output = output;
    return cfg;
}

namespace detail {

inline nlohmann::json big(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

// RFC 4180: quote fields containing separators, quotes or line breaks.
inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + '"';
}

inline std::string routes_text(const Witness& w)
{
    std::string s;
    for (const auto& [name, value] : w.routes)
        s += (s.empty() ? "" : ";") + name + "=" + value.str();
    return s;
}

inline nlohmann::json to_json(const CheckResult& r)
{
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : r.witnesses) {
        nlohmann::json routes = nlohmann::json::object();
        for (const auto& [name, value] : w.routes)
            routes[name] = big(value);
        nlohmann::json j{{"n", w.n},         {"label", w.label}, {"expected", big(w.expected)},
                         {"actual", big(w.actual)}, {"ok", w.ok},  {"routes", routes}};
        if (w.counterexample)
            j["counterexample"] = *w.counterexample;
        if (w.note)
            j["note"] = *w.note;
        ws.push_back(std::move(j));
    }
    nlohmann::json ds = nlohmann::json::array();
    for (const auto& d : r.diagnostics)
        ds.push_back({{"n", d.n}, {"kind", d.kind}, {"object", d.object}, {"reason", d.reason}});
    return {{"check", r.check_name},
            {"range", {r.n_min, r.n_max}},
            {"status", to_string(r.status)},
            {"witnesses", ws},
            {"diagnostics", ds}};
}

inline void report_diagnostics(const CheckResult& r, std::ostream& err)
{
    for (const auto& d : r.diagnostics)
        err << "diagnostic " << r.check_name << " n=" << d.n << " [" << d.kind << "] " << d.object << ": "
            << d.reason << '\n';
}

inline int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::vector<CheckResult> results;
    if (cfg.selector == "all") {
        for (const auto& name : check_names())
            results.push_back(*run_check(name, cfg.max_n));
    } else {
        auto r = run_check(cfg.selector, cfg.max_n);
        if (!r) {
            err << "unknown check: " << cfg.selector << '\n';
            return 2;
        }
        results.push_back(std::move(*r));
    }

    bool failed = false;
    for (const auto& r : results) {
        failed = failed || r.status == CheckStatus::Fail;
        report_diagnostics(r, err);
    }

    switch (cfg.format) {
    case Format::Human:
        for (const auto& r : results) {
            out << std::left << std::setw(16) << r.check_name << " n=" << r.n_min << ".." << r.n_max << "  "
                << to_string(r.status) << "  (" << r.witnesses.size() << " rows";
            if (!r.diagnostics.empty())
                out << ", " << r.diagnostics.size() << " diagnostics";
            out << ")\n";
            if (auto w = r.first_failure()) {
                out << "  first failure n=" << w->n << " [" << w->label << "] expected " << w->expected
                    << " actual " << w->actual << "  " << routes_text(*w) << '\n';
                if (w->counterexample)
                    out << "  counterexample: " << *w->counterexample << '\n';
            }
        }
        break;
    case Format::Csv:
        out << "check,n,label,expected,actual,ok,routes,counterexample,note\n";
        for (const auto& r : results) {
            for (const auto& w : r.witnesses) {
                out << csv_field(r.check_name) << ',' << w.n << ',' << csv_field(w.label) << ',' << w.expected
                    << ',' << w.actual << ',' << (w.ok ? "true" : "false") << ',' << csv_field(routes_text(w))
                    << ',' << csv_field(w.counterexample.value_or("")) << ',' << csv_field(w.note.value_or(""))
                    << '\n';
            }
        }
        break;
    case Format::Json:
        if (results.size() == 1) {
            out << to_json(results.front()).dump(2) << '\n';
        } else {
            nlohmann::json all = nlohmann::json::array();
            for (const auto& r : results)
                all.push_back(to_json(r));
            out << nlohmann::json{{"status", failed ? "fail" : "pass"}, {"checks", all}}.dump(2) << '\n';
        }
        break;
    }
    return failed ? 1 : 0;
}

inline int run_series(const RunConfig& cfg, std::ostream& out)
{
    const auto s = series_builders().at(cfg.selector)(cfg.order);
    const auto cs = s.coeffs();
    switch (cfg.format) {
    case Format::Human:
    case Format::Csv:
        if (cfg.format == Format::Csv) {
            for (std::size_t i = 0; i < cs.size(); ++i)
                out << (i ? "," : "") << i;
            out << '\n';
        }
        for (std::size_t i = 0; i < cs.size(); ++i)
            out << (i ? "," : "") << cs[i];
        out << '\n';
        break;
    case Format::Json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : cs)
            arr.push_back(big(c));
        out << nlohmann::json{{"name", cfg.selector}, {"order", cfg.order}, {"coefficients", arr}}.dump(2) << '\n';
        break;
    }
    }
    return 0;
}

inline int run_table(const RunConfig& cfg, std::ostream& out)
{
    const auto rows = theorem_table(table_kinds().at(cfg.selector), cfg.max_n);
    bool all_match = true;
    for (const auto& r : rows)
        all_match = all_match && r.match;
    switch (cfg.format) {
    case Format::Human:
        out << std::right << std::setw(4) << "n" << std::setw(12) << "lhs" << std::setw(12) << "rhs"
            << std::setw(10) << "excess" << std::setw(7) << "match" << '\n';
        for (const auto& r : rows)
            out << std::setw(4) << r.n << std::setw(12) << r.lhs << std::setw(12) << r.rhs << std::setw(10)
                << r.excess << std::setw(7) << (r.match ? "yes" : "NO") << '\n';
        break;
    case Format::Csv:
        out << "n,lhs,rhs,excess,match\n";
        for (const auto& r : rows)
            out << r.n << ',' << r.lhs << ',' << r.rhs << ',' << r.excess << ',' << (r.match ? "true" : "false")
                << '\n';
        break;
    case Format::Json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n},
                           {"lhs", big(r.lhs)},
                           {"rhs", big(r.rhs)},
                           {"excess", big(r.excess)},
                           {"match", r.match}});
        out << nlohmann::json{{"table", cfg.selector}, {"rows", arr}}.dump(2) << '\n';
        break;
    }
    }
    return all_match ? 0 : 1;
}

inline int run_sset(const RunConfig& cfg, std::ostream& out)
{
    const auto pairs = s_set(cfg.n);
    switch (cfg.format) {
    case Format::Human:
        for (const auto& p : pairs)
            out << to_string(p) << '\n';
        break;
    case Format::Csv:
        out << "lambda,a,b\n";
        for (const auto& p : pairs) {
            std::string lam = "[";
            for (std::size_t i = 0; i < p.lambda.length(); ++i)
                lam += (i ? "," : "") + std::to_string(p.lambda.parts()[i]);
            out << csv_field(lam + "]") << ',' << p.a << ',' << p.b << '\n';
        }
        break;
    case Format::Json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : pairs) {
            std::vector<int> parts(p.lambda.parts().begin(), p.lambda.parts().end());
            arr.push_back({{"lambda", parts}, {"a", p.a}, {"b", p.b}});
        }
        out << nlohmann::json{{"n", cfg.n}, {"pairs", arr}}.dump(2) << '\n';
        break;
    }
    }
    return 0;
}

} // namespace detail

/// Executes one command. Output goes to cfg.output when set, otherwise to out.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::ofstream file;
    std::ostream* sink = &out;
    if (cfg.output) {
        file.open(*cfg.output);
        if (!file) {
            err << "cannot open output file: " << *cfg.output << '\n';
            return 2;
        }
        sink = &file;
    }
    switch (cfg.command) {
    case Command::Verify: return detail::run_verify(cfg, *sink, err);
    case Command::Series: return detail::run_series(cfg, *sink);
    case Command::Table: return detail::run_table(cfg, *sink);
    case Command::SSet: return detail::run_sset(cfg, *sink);
    }
    return 2;
}

inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    const auto parsed = parse_args(argc, argv, default_order_from_env(), out, err);
    if (const int* code = std::get_if<int>(&parsed))
        return *code;
    return run(std::get<RunConfig>(parsed), out, err);
}

} // namespace rrbeck::cli
