#pragma once

#include "zkmc/model.hpp"

namespace zkmc {

struct Span {
    uint32_t line = 1, col = 1;
};

struct Diagnostic {
    Span span;
    std::string message;
};

struct ParseError : Error {
    std::vector<Diagnostic> diagnostics;
    explicit ParseError(std::vector<Diagnostic> diags)
        : Error(diags.empty() ? "parse error"
                              : "parse error at " + std::to_string(diags[0].span.line) + ":" +
                                    std::to_string(diags[0].span.col) + ": " + diags[0].message),
          diagnostics(std::move(diags)) {}
};

// symbolic certifier unit: system, automaton, piecewise ranking
struct ParsedUnit {
    SymbolicSystem system;
    BuchiSpec spec;
    PiecewiseRanking ranking;
    std::vector<std::string> q_names;

    bool operator==(const ParsedUnit& o) const;
};

ParsedUnit parse_unit(const std::string& text, int64_t coeff_bound);
std::string print_unit(const ParsedUnit& u);

}  // namespace zkmc
