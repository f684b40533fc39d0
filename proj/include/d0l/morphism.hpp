#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "d0l/words.hpp"

namespace d0l {

/// Homomorphism from source* to target*, given by one image per source letter.
class Morphism {
public:
    Morphism(Alphabet source, Alphabet target, std::vector<Word> images);

    static Morphism endomorphism(Alphabet alphabet, std::vector<Word> images);
    static Morphism identity(const Alphabet& alphabet);

    const Alphabet& source() const noexcept { return source_; }
    const Alphabet& target() const noexcept { return target_; }
    const Word& image(Letter a) const;
    const std::vector<Word>& images() const noexcept { return images_; }

    bool is_endomorphism() const { return source_ == target_; }
    bool is_erasing() const;
    std::size_t max_image_length() const;

    bool operator==(const Morphism& other) const = default;

private:
    Alphabet source_;
    Alphabet target_;
    std::vector<Word> images_;
};

class D0LSystem {
public:
    D0LSystem(Morphism morphism, Word axiom);

    const Morphism& morphism() const noexcept { return morphism_; }
    const Alphabet& alphabet() const noexcept { return morphism_.source(); }
    const Word& axiom() const noexcept { return axiom_; }

    bool operator==(const D0LSystem& other) const = default;

private:
    Morphism morphism_;
    Word axiom_;
};

struct LetterClassification {
    std::set<Letter> mortal;
    std::set<Letter> bounded;
    std::set<Letter> unbounded;

    bool is_bounded(Letter a) const { return bounded.contains(a); }
};

/// phi(w). A function object rather than a function, so that an unqualified
/// call is never hijacked by std::apply through argument-dependent lookup.
struct ApplyFn {
    Word operator()(const Morphism& phi, const Word& w) const;
};
inline constexpr ApplyFn apply{};
/// phi^n(w).
Word iterate(const Morphism& phi, const Word& w, std::size_t n);
/// The morphism a -> outer(inner(a)).
Morphism compose(const Morphism& outer, const Morphism& inner);

/// Re-expresses a word over another alphabet that has the same symbols.
Word embed(const Word& w, const Alphabet& from, const Alphabet& to);

/// Restriction of G to the letters that occur in its language.
D0LSystem reduce(const D0LSystem& system);

std::set<Letter> mortal_letters(const Morphism& phi);
LetterClassification bounded_letters(const Morphism& phi);

struct InjectivityResult {
    bool injective = true;
    /// Two distinct source words with the same image, when not injective.
    std::optional<std::pair<Word, Word>> witness;

    explicit operator bool() const noexcept { return injective; }
};

/// Two distinct index sequences whose concatenations coincide, found by a
/// breadth-first Sardinas-Patterson search. Empty words and duplicates count
/// as relations of length one. Absent iff the words form a code.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
find_code_relation(std::span<const Word> words);

InjectivityResult is_injective(const Morphism& phi);

Letter first_letter(const Morphism& phi, Letter a);

}  // namespace d0l
