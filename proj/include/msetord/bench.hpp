#ifndef MSETORD_BENCH_HPP
#define MSETORD_BENCH_HPP

// Benchmark model builders and the CSV reporting used by the bench command.
//
// symmetric-matrix: k interchangeable rows of n variables with domains 0..d
// and a fixed row sum s. Rows can be permuted freely, so a chain of ordering
// constraints between adjacent rows breaks the symmetry.
//
// template-design (decision variant): t identical templates times v
// variations; a[i][j] in 0..s counts slots of variation i on template j.
// Each template's slots sum to s; each variation must meet its demand with
// a fixed run count R per template. Templates are interchangeable, so the
// chain runs over template (column) vectors.

#include <cstdio>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "msetord/engine.hpp"
#include "msetord/errors.hpp"

namespace msetord {

enum class Scheme { None, Msetord, Lex };

inline const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::None: return "none";
        case Scheme::Msetord: return "msetord";
        case Scheme::Lex: return "lex";
    }
    return "?";
}

struct SymmetricMatrixParams {
    int k = 2; // rows
    int n = 2; // columns
    int d = 1; // domain upper bound, values 0..d
    int s = 1; // row sum
};

struct TemplateDesignParams {
    int t = 2;                  // templates
    int v = 2;                  // variations
    int s = 2;                  // slots per template
    int run_count = 1;          // runs per template slot assignment
    std::vector<int> demands;   // one per variation
};

// Keeps generated models at desk scale.
inline void check_desk_scale(long long vars, long long width) {
    if (vars <= 0 || vars > 10000) throw UsageError("model size out of desk-scale bounds");
    if (width < 1 || width > 1000000) throw UsageError("value range out of desk-scale bounds");
}

struct BuiltModel {
    Model model;
    std::vector<std::vector<VarId>> groups; // the interchangeable vectors, in order
};

inline void add_chain(Model& m, const std::vector<std::vector<VarId>>& groups, Scheme scheme,
                      bool strict) {
    for (size_t g = 0; g + 1 < groups.size(); ++g) {
        switch (scheme) {
            case Scheme::None:
                break;
            case Scheme::Msetord:
                m.emplace<MsetOrderingConstraint>(groups[g], groups[g + 1], strict);
                break;
            case Scheme::Lex:
                m.emplace<LexLeqConstraint>(groups[g], groups[g + 1]);
                break;
        }
    }
}

inline BuiltModel build_symmetric_matrix(const SymmetricMatrixParams& p, Scheme scheme,
                                         bool strict_chain = false) {
    if (p.k < 1 || p.n < 1 || p.d < 0 || p.s < 0)
        throw UsageError("symmetric-matrix: parameters must be non-negative, k,n >= 1");
    check_desk_scale(static_cast<long long>(p.k) * p.n, p.d + 1);
    BuiltModel out;
    for (int r = 0; r < p.k; ++r) {
        std::vector<VarId> row;
        for (int c = 0; c < p.n; ++c) row.push_back(out.model.new_var_range(0, p.d));
        out.model.emplace<SumEqConstraint>(row, static_cast<long long>(p.s));
        out.groups.push_back(std::move(row));
    }
    add_chain(out.model, out.groups, scheme, strict_chain);
    return out;
}

inline BuiltModel build_template_design(const TemplateDesignParams& p, Scheme scheme,
                                        bool strict_chain = false) {
    if (p.t < 1 || p.v < 1 || p.s < 0 || p.run_count < 1)
        throw UsageError("template-design: t,v,run-count >= 1 and s >= 0 required");
    if (static_cast<int>(p.demands.size()) != p.v)
        throw UsageError("template-design: one demand per variation required");
    check_desk_scale(static_cast<long long>(p.t) * p.v, p.s + 1);
    BuiltModel out;
    // a[i][j]: slots of variation i on template j; variation-major creation
    std::vector<std::vector<VarId>> slot(static_cast<size_t>(p.v));
    for (int i = 0; i < p.v; ++i)
        for (int j = 0; j < p.t; ++j)
            slot[static_cast<size_t>(i)].push_back(out.model.new_var_range(0, p.s));
    for (int j = 0; j < p.t; ++j) {
        std::vector<VarId> column;
        for (int i = 0; i < p.v; ++i) column.push_back(slot[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        out.model.emplace<SumEqConstraint>(column, static_cast<long long>(p.s));
        out.groups.push_back(std::move(column));
    }
    for (int i = 0; i < p.v; ++i) {
        std::vector<long long> weights(static_cast<size_t>(p.t), p.run_count);
        out.model.emplace<SumGeqConstraint>(std::move(weights), slot[static_cast<size_t>(i)],
                                            static_cast<long long>(p.demands[static_cast<size_t>(i)]));
    }
    add_chain(out.model, out.groups, scheme, strict_chain);
    return out;
}

struct BenchRow {
    std::string model;
    std::string scheme;
    std::string params;
    SearchStats stats;
};

inline void write_csv_header(std::ostream& os) {
    os << "model,scheme,params,solutions,nodes,failures,propagations,millis\n";
}

inline void write_csv_row(std::ostream& os, const BenchRow& row) {
    char millis[32];
    std::snprintf(millis, sizeof millis, "%.3f", row.stats.elapsed_ms());
    os << row.model << ',' << row.scheme << ',' << row.params << ',' << row.stats.solutions
       << ',' << row.stats.nodes << ',' << row.stats.failures << ',' << row.stats.propagations
       << ',' << millis << '\n';
}

} // namespace msetord

#endif
