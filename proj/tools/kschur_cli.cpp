// Command-line front end: core constructions, tableau filling, monomial
// expansions, and the verification sweeps.

#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "kschur/affine.hpp"
#include "kschur/core.hpp"
#include "kschur/cylindric.hpp"
#include "kschur/io.hpp"
#include "kschur/polytope.hpp"
#include "kschur/symfunc.hpp"
#include "kschur/tableau.hpp"
#include "kschur/verify.hpp"

namespace {

using namespace kschur;
using nlohmann::json;

void print_grid(std::ostream& os, const Partition& shape,
                const std::vector<std::vector<int>>& rows) {
    for (int i = shape.length(); i >= 1; --i) {
        for (int c = 1; c <= shape.part(i); ++c) {
            int v = rows[i - 1][c - 1];
            os << (v ? std::to_string(v) : ".") << ' ';
        }
        os << '\n';
    }
}

int cmd_core(const std::string& lambda_text, int k, bool as_json) {
    Partition lambda = Partition::parse(lambda_text);
    CoreConstruction cc = bounded_to_core(lambda, k);
    if (as_json) {
        std::cout << to_json(cc).dump() << '\n';
        return 0;
    }
    std::cout << "core: " << cc.core.shape.to_string() << '\n';
    std::cout << "shifts: [";
    for (std::size_t i = 0; i < cc.shifts.size(); ++i)
        std::cout << (i ? "," : "") << cc.shifts[i];
    std::cout << "]\n";
    std::cout << "rho: " << cc.inner.to_string() << '\n';
    auto sets = row_residue_sets(cc);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::cout << "R(" << i + 1 << "): {";
        bool first = true;
        for (int r : sets[i]) {
            std::cout << (first ? "" : ",") << r;
            first = false;
        }
        std::cout << "}\n";
    }
    return 0;
}

int cmd_fill(const std::string& lambda_text, const std::string& mu_text, int k,
             bool trace, bool as_json) {
    Partition lambda = Partition::parse(lambda_text);
    Partition mu = Partition::parse(mu_text);
    if (auto bad = dominance_violation(mu, lambda)) {
        std::cerr << "error: dominance violated at prefix " << *bad << " (mu does not precede lambda)\n";
        return 1;
    }
    if (trace) {
        FayersResult fr = fayers_ssyt(lambda, mu);
        PartialKTableau state = empty_partial(lambda, k);
        for (int iota = mu.length(); iota >= 1; --iota) {
            state = row_fill(std::move(state), fr.chain[iota], mu.part(iota), iota);
            std::cout << "after filling letter " << iota << ":\n";
            print_grid(std::cout, state.core.shape, state.rows);
        }
        std::cout << rows_to_string(state.rows) << '\n';
        return 0;
    }
    KTableau t = build_kssyt(lambda, mu, k);
    if (as_json)
        std::cout << to_json(t).dump() << '\n';
    else
        std::cout << rows_to_string(t.rows) << '\n';
    return 0;
}

int cmd_expand(const std::string& object, const std::string& lambda_text,
               const std::string& word_text, int k, const std::string& outer_text,
               const std::string& inner_text, const std::string& basis_name,
               int support_n, const std::string& format) {
    MonExpansion f;
    if (object == "schur") {
        f = schur_monomials(Partition::parse(lambda_text));
    } else if (object == "dual-k-schur") {
        f = dual_k_schur_monomials(Partition::parse(lambda_text), k);
    } else if (object == "k-schur") {
        f = k_schur_monomials(Partition::parse(lambda_text), k);
    } else if (object == "affine-stanley") {
        f = affine_stanley_monomials(from_word(parse_word(word_text), k));
    } else if (object == "cylindric") {
        CylindricShape outer = parse_cylindric(outer_text);
        CylindricShape inner = parse_cylindric(inner_text);
        f = cylindric_skew_schur_monomials(outer, inner, cyl_period_boxes(outer, inner));
    } else {
        std::cerr << "error: unknown object '" << object << "'\n";
        return 1;
    }

    json out;
    if (!basis_name.empty()) {
        Basis basis;
        if (basis_name == "schur")
            basis = Basis::schur;
        else if (basis_name == "dual-k-schur")
            basis = Basis::dual_k_schur;
        else {
            std::cerr << "error: unknown basis '" << basis_name << "'\n";
            return 1;
        }
        out = to_json(decompose_in_basis(f, basis, k));
    } else {
        out = to_json(f);
    }
    if (support_n > 0)
        out["support_points"] = (long long)support(f, support_n).points.size();

    if (format == "csv") {
        for (auto& [key, value] : out["coeffs"].items())
            std::cout << key << "," << value << '\n';
    } else {
        std::cout << out.dump() << '\n';
    }
    return 0;
}

int cmd_verify(SweepConfig config, const std::string& output_path, const std::string& format) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            std::cerr << "error: cannot open " << output_path << '\n';
            return 1;
        }
        os = &file;
    }

    std::map<std::string, int> tally;
    double total_ms = 0;
    auto sink = [&](const Verdict& v) {
        json payload = verdict_payload(v);
        if (format == "csv") {
            *os << v.check << ',' << v.params.dump() << ',' << v.result << ','
                << (v.witness.is_null() ? "" : v.witness.dump()) << '\n';
        } else {
            *os << payload.dump() << '\n';
        }
        ++tally[v.result];
        total_ms += v.elapsed_ms;
        std::cerr << v.check << ' ' << v.params.dump() << ' ' << v.result << " ("
                  << v.elapsed_ms << " ms)\n";
    };
    bool ok = run_checks(config, sink);

    std::cerr << "summary:";
    for (auto& [result, count] : tally) std::cerr << ' ' << result << '=' << count;
    std::cerr << " elapsed=" << total_ms << " ms\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual k-Schur combinatorics engine"};
    app.require_subcommand(1);

    std::string lambda_text, mu_text, word_text, outer_text, inner_text;
    std::string basis_name, format = "json", output_path, config_path, checks_csv;
    std::string k_range_text, size_range_text, n_range_text;
    int k = 1, support_n = 0;
    bool trace = false;
    long long budget = 10'000'000;

    auto* core = app.add_subcommand("core", "core construction for a k-bounded partition");
    core->add_option("--lambda", lambda_text, "partition, e.g. [4,4,4,2,1]")->required();
    core->add_option("--k", k, "bound k")->required();

    auto* fill = app.add_subcommand("fill", "build a semistandard k-tableau");
    fill->add_option("--lambda", lambda_text)->required();
    fill->add_option("--mu", mu_text)->required();
    fill->add_option("--k", k)->required();
    fill->add_flag("--trace", trace, "print each row-filling stage");

    auto* expand = app.add_subcommand("expand", "monomial expansion of a symmetric polynomial");
    std::string object;
    expand->add_option("object", object,
                       "schur | dual-k-schur | k-schur | affine-stanley | cylindric")
        ->required();
    expand->add_option("--lambda", lambda_text);
    expand->add_option("--word", word_text, "comma-separated residues, e.g. 2,1,0,2");
    expand->add_option("--k", k);
    expand->add_option("--outer", outer_text, "cylindric shape n,m:[a,b]");
    expand->add_option("--inner", inner_text, "cylindric shape n,m:[a,b]");
    expand->add_option("--basis", basis_name, "decompose in schur | dual-k-schur");
    expand->add_option("--support", support_n, "also report the support size in n variables");
    expand->add_option("--format", format, "json | csv");

    auto* verify = app.add_subcommand("verify", "run verification sweeps");
    verify->add_option("--checks", checks_csv, "comma-separated check names (default: all)");
    verify->add_option("--k", k_range_text, "k range, e.g. 2..4");
    verify->add_option("--size", size_range_text, "size range, e.g. 1..8");
    verify->add_option("--n", n_range_text, "variable-count range, e.g. 1..8");
    auto* budget_opt = verify->add_option("--budget", budget, "search-node cap per instance");
    verify->add_option("--output", output_path, "write verdicts to a file");
    verify->add_option("--format", format, "jsonl | csv");
    verify->add_option("--config", config_path, "flat key=value config file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (core->parsed()) return cmd_core(lambda_text, k, false);
        if (fill->parsed()) return cmd_fill(lambda_text, mu_text, k, trace, false);
        if (expand->parsed())
            return cmd_expand(object, lambda_text, word_text, k, outer_text, inner_text,
                              basis_name, support_n, format);
        if (verify->parsed()) {
            SweepConfig config;
            // config file first, flags override
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) {
                    std::cerr << "error: cannot open " << config_path << '\n';
                    return 1;
                }
                std::string line;
                while (std::getline(in, line)) {
                    auto eq = line.find('=');
                    if (eq == std::string::npos || line.empty() || line[0] == '#') continue;
                    auto strip = [](std::string s) {
                        while (!s.empty() && std::isspace((unsigned char)s.front())) s.erase(0, 1);
                        while (!s.empty() && std::isspace((unsigned char)s.back())) s.pop_back();
                        return s;
                    };
                    std::string key = strip(line.substr(0, eq)), value = strip(line.substr(eq + 1));
                    if (key == "k") {
                        auto [lo, hi] = parse_range(value);
                        config.k_lo = lo;
                        config.k_hi = hi;
                    } else if (key == "size") {
                        auto [lo, hi] = parse_range(value);
                        config.size_lo = lo;
                        config.size_hi = hi;
                    } else if (key == "n") {
                        auto [lo, hi] = parse_range(value);
                        config.n_lo = lo;
                        config.n_hi = hi;
                    } else if (key == "checks") {
                        config.checks.clear();
                        std::size_t pos = 0;
                        while (pos < value.size()) {
                            auto comma = value.find(',', pos);
                            config.checks.push_back(value.substr(
                                pos, comma == std::string::npos ? comma : comma - pos));
                            if (comma == std::string::npos) break;
                            pos = comma + 1;
                        }
                    } else if (key == "budget") {
                        config.budget = std::stoll(value);
                    } else if (key == "output") {
                        output_path = value;
                    } else if (key == "format") {
                        format = value;
                    } else {
                        std::cerr << "error: unknown config key '" << key << "'\n";
                        return 1;
                    }
                }
            }
            if (!k_range_text.empty()) {
                auto [lo, hi] = parse_range(k_range_text);
                config.k_lo = lo;
                config.k_hi = hi;
            }
            if (!size_range_text.empty()) {
                auto [lo, hi] = parse_range(size_range_text);
                config.size_lo = lo;
                config.size_hi = hi;
            }
            if (!n_range_text.empty()) {
                auto [lo, hi] = parse_range(n_range_text);
                config.n_lo = lo;
                config.n_hi = hi;
            }
            if (!checks_csv.empty()) {
                config.checks.clear();
                std::size_t pos = 0;
                while (pos < checks_csv.size()) {
                    auto comma = checks_csv.find(',', pos);
                    config.checks.push_back(checks_csv.substr(
                        pos, comma == std::string::npos ? comma : comma - pos));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            }
            if (budget_opt->count() > 0) config.budget = budget;
            return cmd_verify(config, output_path, format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
