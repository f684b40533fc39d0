#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "d0l/morphism.hpp"

namespace d0l {

enum class SimplificationKind { ErasingElimination, DuplicateMerge, CodeReduction };

std::string_view to_string(SimplificationKind kind);

/// One twining f = k o h, g = h o k over a strictly smaller alphabet.
struct SimplificationStep {
    Morphism h;  // A -> B
    Morphism k;  // B -> A
    SimplificationKind kind;

    /// Builds the step and checks that k o h reproduces `f` letter by letter
    /// and that B is smaller than A. Throws InvariantError otherwise.
    SimplificationStep(Morphism h, Morphism k, SimplificationKind kind, const Morphism& f);

    /// g = h o k.
    Morphism simplified() const { return compose(h, k); }
};

struct SimplificationChain {
    D0LSystem original_system;
    std::vector<SimplificationStep> steps;
    D0LSystem final_system;

    /// Pulls a word over the final alphabet back to the original one by
    /// applying every k in reverse order.
    Word map_back(const Word& w) const;
};

SimplificationStep eliminate_erasing(const Morphism& f);
SimplificationStep merge_duplicate_images(const Morphism& f);
SimplificationStep code_reduce(const Morphism& f);

/// Exhaustive search for at most max_size non-empty words, each a factor of
/// some element of `words`, such that every element factorizes over them.
/// Candidates that form a code are preferred.
std::optional<std::vector<Word>> search_factorizing_basis(std::span<const Word> words, std::size_t max_size);

/// One factorization of w over `basis` as a sequence of basis indices.
std::optional<std::vector<std::size_t>> factorize(const Word& w, std::span<const Word> basis);

/// Requires a reduced system.
SimplificationChain injective_simplification(const D0LSystem& system);

}  // namespace d0l
