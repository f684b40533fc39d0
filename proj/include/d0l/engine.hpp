#pragma once

#include <set>
#include <vector>

#include "d0l/morphism.hpp"
#include "d0l/simplify.hpp"

namespace d0l {

enum class ClassSource { Bounded, Unbounded };

/// Equivalence class [v]^omega of an infinite periodic factor.
struct PeriodicFactorClass {
    Word representative;  // canonical rotation of a primitive word
    std::set<Word> conjugates;
    ClassSource source;

    bool operator==(const PeriodicFactorClass&) const = default;
};

struct AnalysisReport {
    D0LSystem original;
    /// Empty chain over the reduced system when the language is finite.
    SimplificationChain chain;
    LetterClassification classification;  // of the original morphism
    bool pushy = false;
    bool repetitive = false;
    bool strongly_repetitive = false;
    /// Over the original alphabet, sorted by representative.
    std::vector<PeriodicFactorClass> classes;
    /// Canonical representatives over the alphabet of chain.final_system.
    std::vector<Word> final_classes;
};

/// Each class maps to the class of the primitive root of its image.
struct PeriodicFactorGraph {
    std::vector<Word> vertices;
    std::vector<std::size_t> successor;
};

AnalysisReport analyze(const D0LSystem& system);

bool is_repetitive(const D0LSystem& system);

/// Built over the final system's classes. Throws InvariantError unless every
/// vertex has exactly one predecessor.
PeriodicFactorGraph periodic_factor_graph(const AnalysisReport& report);

/// Canonical rotation of the primitive root.
Word class_key(const Word& w);

}  // namespace d0l
