#include "fibcalc/cli.hpp"

#include <CLI11.hpp>
#include <cstddef>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fibcalc/families.hpp"
#include "fibcalc/fibnum.hpp"
#include "fibcalc/operators.hpp"

namespace fibcalc {

namespace {

using nlohmann::ordered_json;

std::string render_cell(const Rational& q) { return to_string(q); }

// "name=value" pairs from repeated --param flags.
struct Params {
    bool has_a = false;
    Rational a;
    long alpha = 1;
};

Params parse_params(const std::vector<std::string>& raw) {
    Params p;
    for (const auto& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--param expects name=value, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (name == "a") {
            p.a = rational_from_string(value);
            p.has_a = true;
        } else if (name == "alpha") {
            std::size_t used = 0;
            const long v = std::stol(value, &used);
            if (used != value.size() || v < 0)
                throw std::invalid_argument("--param alpha expects a nonnegative integer");
            p.alpha = v;
        } else {
            throw std::invalid_argument("unknown parameter '" + name + "'");
        }
    }
    return p;
}

int effective_trunc(long trunc_flag, std::size_t upto) {
    if (trunc_flag < 0) return std::max<int>(kDefaultTrunc, static_cast<int>(upto));
    return static_cast<int>(trunc_flag);
}

// "sheffer:<Q>:<S>" carries two embedded literals that may themselves
// contain colons (abel:a=2, series:[...]); try each split point and take
// the first that parses on both sides.
std::pair<OpSeries, OpSeries> split_sheffer_pair(const std::string& text, int trunc) {
    for (auto pos = text.find(':'); pos != std::string::npos; pos = text.find(':', pos + 1)) {
        try {
            return {parse_operator(text.substr(0, pos), trunc),
                    parse_operator(text.substr(pos + 1), trunc)};
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::invalid_argument("cannot split '" + text + "' into an operator pair");
}

std::vector<XPoly> family_table(const std::string& name, std::size_t upto, const Params& par,
                                int trunc) {
    std::vector<XPoly> terms;
    terms.reserve(upto + 1);
    if (name.rfind("basic:", 0) == 0) {
        const OpSeries Q = parse_operator(name.substr(6), trunc);
        terms = basic_sequence(Q, upto).terms;
    } else if (name.rfind("sheffer:", 0) == 0) {
        const auto [Q, S] = split_sheffer_pair(name.substr(8), trunc);
        terms = sheffer_sequence(Q, S, upto).terms;
    } else if (name == "abel") {
        for (std::size_t n = 0; n <= upto; ++n) terms.push_back(abel_closed(n));
    } else if (name == "laguerre") {
        for (std::size_t n = 0; n <= upto; ++n) terms.push_back(laguerre_basic_closed(n));
    } else if (name == "hermite") {
        for (std::size_t n = 0; n <= upto; ++n) terms.push_back(hermite_closed(n));
    } else if (name == "laguerre-alpha") {
        for (std::size_t n = 0; n <= upto; ++n)
            terms.push_back(laguerre_alpha_closed(n, par.alpha));
    } else if (name == "bernoulli") {
        for (std::size_t n = 0; n <= upto; ++n) terms.push_back(bernoulli_closed(n));
    } else {
        throw std::invalid_argument("unknown family '" + name + "'");
    }
    if (par.has_a)
        for (auto& t : terms) t = t.substitute_a(par.a);
    return terms;
}

std::string table_payload(const std::string& command, const std::string& name,
                          const std::vector<XPoly>& terms, const std::string& format) {
    if (format == "json") {
        ordered_json doc;
        doc["command"] = command;
        doc["name"] = name;
        doc["upto"] = terms.size() - 1;
        ordered_json arr = ordered_json::array();
        for (const auto& t : terms) arr.push_back(render(t));
        doc["terms"] = std::move(arr);
        return doc.dump(2);
    }
    std::string out;
    for (std::size_t n = 0; n < terms.size(); ++n) {
        if (n) out += '\n';
        out += std::to_string(n) + (format == "csv" ? "," : ": ") + render(terms[n]);
    }
    return out;
}

std::string scalar_payload(const std::string& command, const ordered_json& args,
                           const mpz_class& value, const std::string& format) {
    if (format == "json") {
        ordered_json doc;
        doc["command"] = command;
        for (const auto& [k, v] : args.items()) doc[k] = v;
        doc["value"] = value.get_str();
        return doc.dump(2);
    }
    return value.get_str();
}

std::string matrix_payload(const std::string& command, const IncidenceFn& m,
                           const std::string& style, const std::string& format) {
    const MatrixStyle st = style == "paper" ? MatrixStyle::paper : MatrixStyle::full;
    if (format == "json") {
        ordered_json doc;
        doc["command"] = command;
        doc["n"] = m.n;
        doc["style"] = style;
        ordered_json rows = ordered_json::array();
        for (std::size_t x = 1; x <= m.n; ++x) {
            ordered_json row = ordered_json::array();
            for (std::size_t y = 1; y <= m.n; ++y) {
                if (st == MatrixStyle::paper && y < x)
                    row.push_back(nullptr);
                else
                    row.push_back(render_cell(m.at(x, y)));
            }
            rows.push_back(std::move(row));
        }
        doc["rows"] = std::move(rows);
        return doc.dump(2);
    }
    return render_matrix(m, st, format == "csv" ? MatrixFormat::csv : MatrixFormat::text);
}

std::string verify_payload(const DiscrepancyReport& rep, std::size_t upto,
                           const std::vector<std::string>& families, const std::string& format) {
    if (format == "json") {
        ordered_json doc;
        doc["command"] = "verify";
        doc["upto"] = upto;
        doc["families"] = families;
        ordered_json arr = ordered_json::array();
        for (const auto& e : rep.entries) {
            ordered_json item;
            item["family"] = e.family;
            item["n"] = e.n;
            item["source_pair"] = e.lhs_source + "|" + e.rhs_source;
            item["lhs"] = render(e.lhs);
            item["rhs"] = render(e.rhs);
            item["diff"] = render(e.diff);
            arr.push_back(std::move(item));
        }
        doc["discrepancies"] = std::move(arr);
        doc["count"] = rep.entries.size();
        return doc.dump(2);
    }
    if (format == "csv") {
        std::string out = "family,n,source_pair,lhs,rhs,diff";
        for (const auto& e : rep.entries)
            out += "\n" + e.family + "," + std::to_string(e.n) + "," + e.lhs_source + "|" +
                   e.rhs_source + "," + render(e.lhs) + "," + render(e.rhs) + "," +
                   render(e.diff);
        return out;
    }
    if (rep.clean()) return "no discrepancies";
    std::string out;
    for (const auto& e : rep.entries)
        out += e.family + " n=" + std::to_string(e.n) + " " + e.lhs_source + " vs " +
               e.rhs_source + ": lhs = " + render(e.lhs) + " ; rhs = " + render(e.rhs) +
               " ; diff = " + render(e.diff) + "\n";
    out += "discrepancies: " + std::to_string(rep.entries.size());
    return out;
}

}  // namespace

std::string render_matrix(const IncidenceFn& m, MatrixStyle style, MatrixFormat format) {
    const char sep = format == MatrixFormat::csv ? ',' : ' ';
    std::string out;
    for (std::size_t x = 1; x <= m.n; ++x) {
        if (x > 1) out += '\n';
        bool first = true;
        for (std::size_t y = 1; y <= m.n; ++y) {
            const bool blank = style == MatrixStyle::paper && y < x;
            if (blank && format == MatrixFormat::text) continue;
            if (!first) out += sep;
            if (!blank) out += render_cell(m.at(x, y));
            first = false;
        }
    }
    return out;
}

IncidenceFn parse_matrix_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(std::move(cells));
    }
    const std::size_t n = rows.size();
    if (n == 0) throw std::invalid_argument("parse_matrix_csv: empty input");
    IncidenceFn m(n);
    for (std::size_t x = 1; x <= n; ++x) {
        if (rows[x - 1].size() != n)
            throw std::invalid_argument("parse_matrix_csv: ragged row");
        for (std::size_t y = 1; y <= n; ++y) {
            const std::string& cell = rows[x - 1][y - 1];
            m.at(x, y) = cell.empty() ? Rational(0) : rational_from_string(cell);
        }
    }
    return m;
}

CommandResult run_command(const std::vector<std::string>& args) {
    CommandResult res;
    CLI::App app{"exact toolkit for fibonomial operator calculus and the cobweb poset"};
    app.require_subcommand(1);

    const auto format_check = CLI::IsMember({"text", "csv", "json"});
    const auto style_check = CLI::IsMember({"full", "paper"});

    std::size_t fib_n = 0;
    auto* cmd_fib = app.add_subcommand("fib", "Fibonacci number F_n");
    cmd_fib->add_option("n", fib_n)->required();
    std::string fib_format = "text";
    cmd_fib->add_option("--format", fib_format)->check(format_check);

    std::size_t ffact_n = 0;
    auto* cmd_ffact = app.add_subcommand("ffact", "F-factorial F_n * ... * F_1");
    cmd_ffact->add_option("n", ffact_n)->required();
    std::string ffact_format = "text";
    cmd_ffact->add_option("--format", ffact_format)->check(format_check);

    std::size_t fall_n = 0, fall_k = 0;
    auto* cmd_fall = app.add_subcommand("falling", "falling product F_n * ... * F_{n-k+1}");
    cmd_fall->add_option("n", fall_n)->required();
    cmd_fall->add_option("k", fall_k)->required();
    std::string fall_format = "text";
    cmd_fall->add_option("--format", fall_format)->check(format_check);

    std::size_t bin_n = 0, bin_k = 0;
    auto* cmd_bin = app.add_subcommand("binom", "fibonomial coefficient");
    cmd_bin->add_option("n", bin_n)->required();
    cmd_bin->add_option("k", bin_k)->required();
    std::string bin_format = "text";
    cmd_bin->add_option("--format", bin_format)->check(format_check);

    std::string fam_name;
    std::size_t fam_upto = 8;
    long fam_trunc = -1;
    std::vector<std::string> fam_params;
    std::string fam_format = "text";
    auto* cmd_fam = app.add_subcommand(
        "family", "table of a named family, basic:<op> or sheffer:<Q>:<S>");
    cmd_fam->add_option("name", fam_name)->required();
    cmd_fam->add_option("--upto", fam_upto);
    cmd_fam->add_option("--trunc", fam_trunc);
    cmd_fam->add_option("--param", fam_params);
    cmd_fam->add_option("--format", fam_format)->check(format_check);

    std::string basic_literal;
    std::size_t basic_upto = 8;
    long basic_trunc = -1;
    std::vector<std::string> basic_params;
    std::string basic_format = "text";
    auto* cmd_basic = app.add_subcommand("basic", "basic sequence of a delta operator");
    cmd_basic->add_option("operator", basic_literal)->required();
    cmd_basic->add_option("--upto", basic_upto);
    cmd_basic->add_option("--trunc", basic_trunc);
    cmd_basic->add_option("--param", basic_params);
    cmd_basic->add_option("--format", basic_format)->check(format_check);

    std::string shef_q, shef_s;
    std::size_t shef_upto = 8;
    long shef_trunc = -1;
    std::vector<std::string> shef_params;
    std::string shef_format = "text";
    auto* cmd_shef = app.add_subcommand("sheffer", "Sheffer sequence for operators Q and S");
    cmd_shef->add_option("Q", shef_q)->required();
    cmd_shef->add_option("S", shef_s)->required();
    cmd_shef->add_option("--upto", shef_upto);
    cmd_shef->add_option("--trunc", shef_trunc);
    cmd_shef->add_option("--param", shef_params);
    cmd_shef->add_option("--format", shef_format)->check(format_check);

    std::size_t zeta_size = 0;
    std::string zeta_style = "full", zeta_format = "text";
    auto* cmd_zeta = app.add_subcommand("zeta", "zeta matrix of the cobweb prefix");
    cmd_zeta->add_option("--size", zeta_size)->required();
    cmd_zeta->add_option("--style", zeta_style)->check(style_check);
    cmd_zeta->add_option("--format", zeta_format)->check(format_check);

    std::size_t mob_size = 0;
    std::string mob_method = "closed", mob_style = "full", mob_format = "text";
    auto* cmd_mob = app.add_subcommand("mobius", "Mobius matrix of the cobweb prefix");
    cmd_mob->add_option("--size", mob_size)->required();
    cmd_mob->add_option("--method", mob_method)
        ->check(CLI::IsMember({"closed", "recurrence", "invert"}));
    cmd_mob->add_option("--style", mob_style)->check(style_check);
    cmd_mob->add_option("--format", mob_format)->check(format_check);

    std::size_t chains_root = 0;
    std::size_t chains_from = 0, chains_to = 0;
    std::vector<std::size_t> chains_sub;
    std::size_t chains_cap = kDefaultChainCap;
    std::string chains_format = "text";
    auto* cmd_chains = app.add_subcommand("chains", "brute-force chain counts");
    cmd_chains->add_option("--root", chains_root, "maximal chains from the root to this level");
    cmd_chains->add_option("--from-level", chains_from);
    cmd_chains->add_option("--to-level", chains_to);
    cmd_chains->add_option("--subposets", chains_sub, "k m")->expected(2);
    cmd_chains->add_option("--cap", chains_cap);
    cmd_chains->add_option("--format", chains_format)->check(format_check);

    std::vector<std::string> ver_families;
    std::size_t ver_upto = 9;
    std::string ver_format = "text";
    auto* cmd_ver = app.add_subcommand("verify", "audit reference listings against formulas");
    cmd_ver->add_option("--families", ver_families)->delimiter(',');
    cmd_ver->add_option("--upto", ver_upto);
    cmd_ver->add_option("--format", ver_format)->check(format_check);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        res.out = out.str();
        res.err = err.str();
        res.exit_code = code == 0 ? 0 : 2;
        // drop the trailing newline CLI11 adds to help text
        while (!res.out.empty() && res.out.back() == '\n') res.out.pop_back();
        return res;
    }

    try {
        if (*cmd_fib) {
            res.out = scalar_payload("fib", {{"n", fib_n}}, fib(fib_n), fib_format);
        } else if (*cmd_ffact) {
            res.out = scalar_payload("ffact", {{"n", ffact_n}}, f_factorial(ffact_n),
                                     ffact_format);
        } else if (*cmd_fall) {
            res.out = scalar_payload("falling", {{"n", fall_n}, {"k", fall_k}},
                                     f_falling(fall_n, fall_k), fall_format);
        } else if (*cmd_bin) {
            res.out = scalar_payload("binom", {{"n", bin_n}, {"k", bin_k}},
                                     fibonomial(bin_n, bin_k), bin_format);
        } else if (*cmd_fam) {
            const Params par = parse_params(fam_params);
            const auto terms =
                family_table(fam_name, fam_upto, par, effective_trunc(fam_trunc, fam_upto));
            res.out = table_payload("family", fam_name, terms, fam_format);
        } else if (*cmd_basic) {
            const Params par = parse_params(basic_params);
            const OpSeries Q =
                parse_operator(basic_literal, effective_trunc(basic_trunc, basic_upto));
            auto terms = basic_sequence(Q, basic_upto).terms;
            if (par.has_a)
                for (auto& t : terms) t = t.substitute_a(par.a);
            res.out = table_payload("basic", basic_literal, terms, basic_format);
        } else if (*cmd_shef) {
            const Params par = parse_params(shef_params);
            const int trunc = effective_trunc(shef_trunc, shef_upto);
            const OpSeries Q = parse_operator(shef_q, trunc);
            const OpSeries S = parse_operator(shef_s, trunc);
            auto terms = sheffer_sequence(Q, S, shef_upto).terms;
            if (par.has_a)
                for (auto& t : terms) t = t.substitute_a(par.a);
            res.out = table_payload("sheffer", shef_q + " ; " + shef_s, terms, shef_format);
        } else if (*cmd_zeta) {
            res.out = matrix_payload("zeta", zeta_matrix(zeta_size), zeta_style, zeta_format);
        } else if (*cmd_mob) {
            IncidenceFn m;
            if (mob_method == "recurrence")
                m = mobius_recurrence(mob_size);
            else if (mob_method == "invert")
                m = mobius_invert(mob_size);
            else
                m = mobius_closed_matrix(mob_size);
            res.out = matrix_payload("mobius", m, mob_style, mob_format);
        } else if (*cmd_chains) {
            const int modes = (chains_root != 0) + (chains_from != 0 || chains_to != 0) +
                              (!chains_sub.empty());
            if (modes != 1)
                throw std::invalid_argument(
                    "chains: choose exactly one of --root, --from-level/--to-level, "
                    "--subposets");
            ordered_json meta;
            mpz_class count;
            if (chains_root != 0) {
                meta["mode"] = "root";
                meta["level"] = chains_root;
                count = count_max_chains_root(chains_root, chains_cap);
            } else if (!chains_sub.empty()) {
                meta["mode"] = "subposets";
                meta["k"] = chains_sub[0];
                meta["m"] = chains_sub[1];
                count = count_subposets(chains_sub[0], chains_sub[1], chains_cap);
            } else {
                if (chains_from == 0 || chains_to == 0)
                    throw std::invalid_argument(
                        "chains: --from-level and --to-level go together");
                meta["mode"] = "between";
                meta["from"] = chains_from;
                meta["to"] = chains_to;
                count = count_chains_between(chains_from, chains_to, chains_cap);
            }
            res.out = scalar_payload("chains", meta, count, chains_format);
        } else if (*cmd_ver) {
            if (ver_families.empty()) ver_families = {"all"};
            const auto rep = verify_families(ver_upto, ver_families);
            res.out = verify_payload(rep, ver_upto, ver_families, ver_format);
            res.exit_code = rep.clean() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        res.exit_code = 2;
        res.out.clear();
        res.err = e.what();
    }
    return res;
}

}  // namespace fibcalc
