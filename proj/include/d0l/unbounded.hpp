#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "d0l/morphism.hpp"

namespace d0l {

/// An unbounded letter that comes back as the first letter of its own image
/// after `period` applications, with `period` minimal and at most #A.
struct FirstLetterCycleCandidate {
    Letter letter;
    std::size_t period;
};

std::vector<FirstLetterCycleCandidate> first_letter_candidates(const D0LSystem& system);

/// Decides whether the fixed point of phi^period starting with `a` is purely
/// periodic, and if so returns v with (phi^period)^omega(a) = v^omega.
/// Requires first(phi^period(a)) = a.
std::optional<Word> lando_periodic_check(const Morphism& phi, std::size_t period, Letter a);
std::optional<Word> lando_periodic_check(const Morphism& phi, std::size_t period, Letter a,
                                         const LetterClassification& letters);

/// Primitive roots of every purely periodic periodic point found above.
std::vector<Word> unbounded_periodic_classes(const D0LSystem& system);

}  // namespace d0l
