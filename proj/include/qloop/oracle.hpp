#pragma once

#include "qloop/closure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qloop {

struct OracleOptions {
    Selector selector = Selector::Full;
    std::uint64_t seed = 20240917;
    int budget = 64;  // Norton samples before giving up
    // Largest dimension for which the Burnside algebra dimension is attempted.
    std::size_t burnside_cap = 12;
    // Skip the pair-test shortcut even when weights separate (cross-validation of the fallback).
    bool force_fallback = false;
};

struct IrreducibilityVerdict {
    bool irreducible = false;
    // "pair-cyclicity", "norton" or "burnside"
    std::string strategy;
    std::optional<Subspace> certificate;
    std::vector<std::string> transcript;
    std::uint64_t seed = 0;
    std::size_t dim = 0;
    bool weight_separated = true;
};

// Index of the unique basis vector whose weight dominates every other weight.
std::size_t top_index(const ModuleRep& m);

// Basis vectors sharing the grading key of the top vector.
std::size_t top_block_size(const ModuleRep& m, Selector s);

// Dimension of the matrix algebra generated by the selected generators (stops once it exceeds cap^2).
std::size_t burnside_dimension(const ModuleRep& m, Selector s, std::size_t cap);

// Closure of the top word under the selected generators is the whole module.
bool is_pseudo_highest_generated(const ModuleRep& m, Selector s = Selector::Full);

IrreducibilityVerdict irreducible_oracle(const ModuleRep& m, const OracleOptions& opts = {});

// Proper, nonzero and invariant under every selected generator.
bool certificate_valid(const ModuleRep& m, const Subspace& w, Selector s);

}  // namespace qloop
