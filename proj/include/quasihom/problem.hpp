#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quasihom/invariant.hpp"

namespace qh {

struct ProblemOptions {
    std::optional<int> degree;            // total-degree truncation
    std::optional<Exponent> class_bound;  // any member of the bound class
    std::optional<std::string> output;    // output path for documents
};

// One problem per document: dimension, variable names, a map and/or an ideal
// given as polynomial strings, plus options. Coefficients stay strings so
// exactness survives the round trip.
struct ProblemFile {
    int dimension = 0;
    std::vector<std::string> variables;
    std::optional<PolyMap> map;
    IdealPresentation ideal;  // may be empty
    bool has_ideal = false;
    ProblemOptions options;
};

// Throws Error(Parse) with line/column diagnostics on malformed input.
ProblemFile parse_problem(const std::string& text);

// Canonical form; parse(print(p)) reproduces p exactly.
std::string print_problem(const ProblemFile& p);

}  // namespace qh
