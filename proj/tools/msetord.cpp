// Command-line surface for the multiset ordering kernel.
//
// Exit codes: 0 success, 1 semantic failure (FAILURE / oracle mismatch),
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "msetord/bench.hpp"
#include "msetord/constraint.hpp"
#include "msetord/diffcheck.hpp"
#include "msetord/engine.hpp"
#include "msetord/fuzzy.hpp"
#include "msetord/mset.hpp"
#include "msetord/oracle.hpp"
#include "msetord/parse.hpp"
#include "msetord/perf.hpp"

namespace {

using namespace msetord;

constexpr int kExitOk = 0;
constexpr int kExitSemanticFailure = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_inline_values(const std::string& text) {
    std::vector<int> out;
    std::istringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("expected integer, got '" + tok + "'");
        }
        if (pos != tok.size()) throw ParseError("expected integer, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<long long> parse_ll_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw ParseError("empty entry in list '" + text + "'");
        out.push_back(std::stoll(tok));
    }
    if (out.empty()) throw ParseError("empty list");
    return out;
}

std::string format_domain(const std::vector<int>& values) {
    std::string out = "{";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out + "}";
}

int cmd_compare(const std::string& a_text, const std::string& b_text) {
    std::vector<int> a = parse_inline_values(a_text);
    std::vector<int> b = parse_inline_values(b_text);
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto* vals : {&a, &b})
        for (int v : *vals) {
            lo = first ? v : std::min(lo, v);
            hi = first ? v : std::max(hi, v);
            first = false;
        }
    ValueRange range(lo, hi);
    MsetOrdering r = mset_compare(mset_from_values(a, range), mset_from_values(b, range));
    std::cout << to_string(r) << "\n";
    return kExitOk;
}

int cmd_propagate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Instance inst = parse_instance(in);

    DomainStore store(inst.range);
    std::vector<VarId> xs, ys;
    for (const auto& d : inst.xs) xs.push_back(store.new_var(d));
    for (const auto& d : inst.ys) ys.push_back(store.new_var(d));
    MsetOrderingConstraint c(store, xs, ys, inst.strict);

    if (check_entailed(store, c)) {
        std::cout << "ENTAILED\n";
        return kExitOk;
    }
    if (c.propagate(store) == PropagationOutcome::Failure) {
        std::cout << "FAILURE\n";
        return kExitSemanticFailure;
    }
    for (size_t i = 0; i < xs.size(); ++i)
        std::cout << "x" << i + 1 << ": " << format_domain(store.values_of(xs[i])) << "\n";
    for (size_t j = 0; j < ys.size(); ++j)
        std::cout << "y" << j + 1 << ": " << format_domain(store.values_of(ys[j])) << "\n";
    return kExitOk;
}

int cmd_oracle_check(const DiffConfig& cfg) {
    DiffReport report = run_differential_check(cfg);
    std::cout << report.trials << " trials, " << report.mismatches << " mismatches\n";
    if (report.mismatches > 0) {
        std::cout << "first counterexample:\n" << report.first_counterexample;
        return kExitSemanticFailure;
    }
    return kExitOk;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw UsageError("cannot open output file '" + path + "'");
    return file;
}

int cmd_bench(const std::string& model, const SymmetricMatrixParams& sm,
              const TemplateDesignParams& td, Scheme scheme, bool strict_chain,
              std::optional<long long> limit, const std::string& out_path) {
    BuiltModel built;
    std::string params;
    if (model == "symmetric-matrix") {
        built = build_symmetric_matrix(sm, scheme, strict_chain);
        params = "k=" + std::to_string(sm.k) + ";n=" + std::to_string(sm.n) +
                 ";d=" + std::to_string(sm.d) + ";s=" + std::to_string(sm.s);
    } else if (model == "template-design") {
        built = build_template_design(td, scheme, strict_chain);
        params = "t=" + std::to_string(td.t) + ";v=" + std::to_string(td.v) +
                 ";s=" + std::to_string(td.s) + ";R=" + std::to_string(td.run_count) + ";demands=";
        for (size_t i = 0; i < td.demands.size(); ++i)
            params += (i ? "|" : "") + std::to_string(td.demands[i]);
    } else {
        throw UsageError("unknown model '" + model + "'");
    }
    SolveResult res = built.model.solve_all(limit);
    std::ofstream file;
    std::ostream& os = open_out(out_path, file);
    write_csv_header(os);
    write_csv_row(os, {model, to_string(scheme), params, res.stats});
    return kExitOk;
}

int cmd_perf(const std::string& n_list, const std::string& d_list, uint64_t seed, int calls,
             bool strict, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_out(out_path, file);
    os << "n,d,nanos-per-call\n";
    for (long long n : parse_ll_list(n_list))
        for (long long d : parse_ll_list(d_list)) {
            if (n < 1 || n > 1000000 || d < 1 || d > 100000)
                throw UsageError("perf: n in 1..10^6 and d in 1..10^5 required");
            double nanos = time_msetord_call(n, d, seed, calls, strict);
            os << n << ',' << d << ',' << static_cast<long long>(nanos + 0.5) << '\n';
        }
    return kExitOk;
}

int cmd_fuzzy_demo(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    FuzzyProblem problem = parse_fuzzy(in);
    FuzzyRanking ranking = rank_fuzzy(problem);
    std::cout << "minimal profile: " << format_domain(ranking.minimal_profile) << "\n";
    for (const auto& assignment : ranking.minimal_assignments) {
        for (size_t i = 0; i < problem.vars.size(); ++i)
            std::cout << (i ? " " : "") << problem.vars[i].name << "=" << assignment[i];
        std::cout << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-domain kernel for multiset ordering constraints"};
    app.require_subcommand(1);

    uint64_t seed = 42;
    std::optional<long long> limit;
    std::string scheme_name = "none";
    std::string out_path;
    bool strict = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--limit", limit, "solution cap");
        sub->add_option("--scheme", scheme_name, "symmetry scheme: none|msetord|lex");
        sub->add_option("--out", out_path, "output path (default stdout)");
        sub->add_flag("--strict", strict, "use the strict ordering");
    };

    std::string arg_a, arg_b, arg_file, model_name = "symmetric-matrix";
    auto* compare = app.add_subcommand("compare", "compare two multiset literals");
    compare->add_option("a", arg_a, "first multiset, e.g. \"1 1 2\"")->required();
    compare->add_option("b", arg_b, "second multiset")->required();

    auto* propagate = app.add_subcommand("propagate", "prune an instance file to GAC");
    propagate->add_option("file", arg_file, "instance file")->required();

    DiffConfig diff_cfg;
    auto* oracle_check =
        app.add_subcommand("oracle-check", "differential test against the enumeration oracle");
    oracle_check->add_option("--trials", diff_cfg.trials, "number of random instances");
    oracle_check->add_option("--max-n", diff_cfg.max_n, "max vector length per side");
    oracle_check->add_option("--max-width", diff_cfg.max_width, "max value range width");
    oracle_check->add_flag("--inject-bug", diff_cfg.inject_bug,
                           "harness self-test: corrupt results and expect a counterexample");
    add_common(oracle_check);

    SymmetricMatrixParams sm;
    TemplateDesignParams td;
    std::string demands_text = "2,2";
    auto* bench = app.add_subcommand("bench", "solve a benchmark model, report CSV");
    bench->add_option("--model", model_name, "symmetric-matrix|template-design");
    bench->add_option("--k", sm.k, "symmetric-matrix: rows");
    bench->add_option("--n", sm.n, "symmetric-matrix: row length");
    bench->add_option("--d", sm.d, "symmetric-matrix: domain upper bound");
    bench->add_option("--s", sm.s, "row sum / slots per template");
    bench->add_option("--t", td.t, "template-design: templates");
    bench->add_option("--v", td.v, "template-design: variations");
    bench->add_option("--run-count", td.run_count, "template-design: runs per slot");
    bench->add_option("--demands", demands_text, "template-design: comma list, one per variation");
    add_common(bench);

    std::string n_list = "100000,200000", d_list = "1024";
    int calls = 11;
    auto* perf = app.add_subcommand("perf", "time propagation calls, report CSV");
    perf->add_option("--n-list", n_list, "comma list of per-side lengths");
    perf->add_option("--d-list", d_list, "comma list of range widths");
    perf->add_option("--calls", calls, "calls per measurement (median)")->check(CLI::Range(9, 1001));
    add_common(perf);

    auto* fuzzy = app.add_subcommand("fuzzy-demo", "rank assignments by violation-cost multiset");
    fuzzy->add_option("file", arg_file, "fuzzy problem file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compare->parsed()) return cmd_compare(arg_a, arg_b);
        if (propagate->parsed()) return cmd_propagate(arg_file);
        if (oracle_check->parsed()) {
            diff_cfg.seed = seed;
            return cmd_oracle_check(diff_cfg);
        }
        if (bench->parsed()) {
            Scheme scheme;
            if (scheme_name == "none")
                scheme = Scheme::None;
            else if (scheme_name == "msetord")
                scheme = Scheme::Msetord;
            else if (scheme_name == "lex")
                scheme = Scheme::Lex;
            else
                throw UsageError("unknown scheme '" + scheme_name + "'");
            for (long long d : parse_ll_list(demands_text))
                td.demands.push_back(static_cast<int>(d));
            return cmd_bench(model_name, sm, td, scheme, strict, limit, out_path);
        }
        if (perf->parsed()) return cmd_perf(n_list, d_list, seed, calls, strict, out_path);
        if (fuzzy->parsed()) return cmd_fuzzy_demo(arg_file);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
