#ifndef MSETORD_PARSE_HPP
#define MSETORD_PARSE_HPP

// Text formats. Instance files describe one multiset ordering constraint:
//
//     range 0 3
//     rel leq          # or: rel lt
//     x 2 : 1,2,3 | 1,2,3
//     y 2 : 2 | 2
//
// Fuzzy problem files declare variables and soft constraints with explicit
// cost tables (costs 0..4, unlisted tuples cost 0):
//
//     var a : 0,1
//     soft s1 on a : 0=2 ; 1=1
//     soft s2 on a b : 0,1=3

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "msetord/errors.hpp"
#include "msetord/mset.hpp"

namespace msetord {

struct Instance {
    ValueRange range;
    bool strict = false;
    std::vector<std::vector<int>> xs, ys; // ascending, deduplicated
};

struct FuzzyProblem {
    struct Var {
        std::string name;
        std::vector<int> domain;
    };
    struct Soft {
        std::string name;
        std::vector<size_t> scope; // indices into vars
        std::map<std::vector<int>, int> costs;
    };
    std::vector<Var> vars;
    std::vector<Soft> softs;
};

namespace detail {

inline std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] inline void fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

inline int parse_int(const std::string& tok, int line_no) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        fail(line_no, "expected integer, got '" + tok + "'");
    }
    if (pos != tok.size()) fail(line_no, "trailing characters in integer '" + tok + "'");
    return v;
}

inline std::vector<int> parse_int_list(const std::string& text, int line_no) {
    std::vector<int> out;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        std::string t = strip(tok);
        if (t.empty()) fail(line_no, "empty entry in value list");
        out.push_back(parse_int(t, line_no));
    }
    return out;
}

} // namespace detail

inline Instance parse_instance(std::istream& in) {
    std::optional<ValueRange> range;
    std::optional<bool> strict;
    std::optional<std::vector<std::vector<int>>> xs, ys;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = detail::strip(raw);
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "range") {
            std::string a, b, extra;
            if (!(ss >> a >> b) || (ss >> extra))
                detail::fail(line_no, "expected 'range <lo> <hi>'");
            int lo = detail::parse_int(a, line_no), hi = detail::parse_int(b, line_no);
            if (lo > hi) detail::fail(line_no, "range lo exceeds hi");
            range = ValueRange(lo, hi);
        } else if (key == "rel") {
            std::string r, extra;
            if (!(ss >> r) || (ss >> extra)) detail::fail(line_no, "expected 'rel leq|lt'");
            if (r == "leq")
                strict = false;
            else if (r == "lt")
                strict = true;
            else
                detail::fail(line_no, "relation must be 'leq' or 'lt'");
        } else if (key == "x" || key == "y") {
            std::string count_tok;
            if (!(ss >> count_tok)) detail::fail(line_no, "expected vector length");
            int count = detail::parse_int(count_tok, line_no);
            if (count < 0) detail::fail(line_no, "vector length must be non-negative");
            std::string colon;
            ss >> colon;
            if (colon != ":") detail::fail(line_no, "expected ':' after vector length");
            std::string rest;
            std::getline(ss, rest);
            rest = detail::strip(rest);
            std::vector<std::vector<int>> doms;
            if (!rest.empty()) {
                std::stringstream parts(rest);
                std::string seg;
                while (std::getline(parts, seg, '|'))
                    doms.push_back(detail::parse_int_list(detail::strip(seg), line_no));
            }
            if (static_cast<int>(doms.size()) != count)
                detail::fail(line_no, "declared length " + std::to_string(count) + " but " +
                                           std::to_string(doms.size()) + " domains given");
            for (auto& d : doms) {
                if (d.empty()) detail::fail(line_no, "empty domain");
                std::sort(d.begin(), d.end());
                d.erase(std::unique(d.begin(), d.end()), d.end());
            }
            auto& side = (key == "x") ? xs : ys;
            if (side) detail::fail(line_no, "duplicate '" + key + "' line");
            side = std::move(doms);
        } else {
            detail::fail(line_no, "unknown directive '" + key + "'");
        }
    }
    if (!range) throw ParseError("missing 'range' line");
    if (!strict) throw ParseError("missing 'rel' line");
    if (!xs) throw ParseError("missing 'x' line");
    if (!ys) throw ParseError("missing 'y' line");
    Instance inst{*range, *strict, std::move(*xs), std::move(*ys)};
    for (const auto& side : {inst.xs, inst.ys})
        for (const auto& d : side)
            for (int v : d)
                if (!inst.range.contains(v))
                    throw ParseError("domain value " + std::to_string(v) +
                                     " outside declared range");
    return inst;
}

inline FuzzyProblem parse_fuzzy(std::istream& in) {
    FuzzyProblem p;
    std::map<std::string, size_t> var_index;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = detail::strip(raw);
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "var") {
            std::string name, colon;
            if (!(ss >> name >> colon) || colon != ":")
                detail::fail(line_no, "expected 'var <name> : v1,v2,...'");
            if (var_index.count(name)) detail::fail(line_no, "duplicate variable '" + name + "'");
            std::string rest;
            std::getline(ss, rest);
            auto dom = detail::parse_int_list(detail::strip(rest), line_no);
            if (dom.empty()) detail::fail(line_no, "variable '" + name + "' has empty domain");
            std::sort(dom.begin(), dom.end());
            dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
            var_index[name] = p.vars.size();
            p.vars.push_back({name, std::move(dom)});
        } else if (key == "soft") {
            std::string name, word;
            if (!(ss >> name >> word) || word != "on")
                detail::fail(line_no, "expected 'soft <name> on <vars> : <tuples>'");
            FuzzyProblem::Soft soft;
            soft.name = name;
            while (ss >> word && word != ":") {
                auto it = var_index.find(word);
                if (it == var_index.end())
                    detail::fail(line_no, "unknown variable '" + word + "' in scope");
                soft.scope.push_back(it->second);
            }
            if (word != ":") detail::fail(line_no, "expected ':' after scope");
            if (soft.scope.empty()) detail::fail(line_no, "soft constraint with empty scope");
            std::string rest;
            std::getline(ss, rest);
            std::stringstream entries(detail::strip(rest));
            std::string entry;
            while (std::getline(entries, entry, ';')) {
                entry = detail::strip(entry);
                if (entry.empty()) continue;
                size_t eq = entry.rfind('=');
                if (eq == std::string::npos)
                    detail::fail(line_no, "expected '<tuple>=<cost>' in '" + entry + "'");
                auto tuple = detail::parse_int_list(detail::strip(entry.substr(0, eq)), line_no);
                int cost = detail::parse_int(detail::strip(entry.substr(eq + 1)), line_no);
                if (tuple.size() != soft.scope.size())
                    detail::fail(line_no, "tuple arity does not match scope");
                if (cost < 0 || cost > 4) detail::fail(line_no, "cost must be in 0..4");
                soft.costs[tuple] = cost;
            }
            p.softs.push_back(std::move(soft));
        } else {
            detail::fail(line_no, "unknown directive '" + key + "'");
        }
    }
    if (p.vars.empty()) throw ParseError("no variables declared");
    return p;
}

} // namespace msetord

#endif
