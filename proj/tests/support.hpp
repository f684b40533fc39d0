#pragma once

// Shared fixtures for the unit and acceptance suites.

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "d0l/cli.hpp"
#include "d0l/morphism.hpp"

namespace d0l::testing {

inline D0LSystem parse(std::string_view text) { return cli::parse_system(text); }

/// Endomorphism over single-character letters: endo("abcd", {"aca", "badc", ...}).
inline Morphism endo(std::string_view letters, std::initializer_list<std::string_view> images) {
    std::vector<std::string> symbols;
    for (char c : letters) {
        symbols.emplace_back(1, c);
    }
    Alphabet alphabet(symbols);
    std::vector<Word> words;
    for (std::string_view img : images) {
        words.push_back(alphabet.spell(img));
    }
    return Morphism::endomorphism(alphabet, std::move(words));
}

inline D0LSystem system(std::string_view letters, std::initializer_list<std::string_view> images,
                        std::string_view axiom) {
    Morphism m = endo(letters, images);
    Word w = m.source().spell(axiom);
    return D0LSystem(std::move(m), std::move(w));
}

inline D0LSystem system_g() { return system("012", {"012", "2", "1"}, "0"); }
inline D0LSystem system_h() { return system("0123", {"0123", "2", "1", "123"}, "0"); }
inline D0LSystem thue_morse() { return system("01", {"01", "10"}, "0"); }
inline D0LSystem fibonacci() { return system("01", {"01", "0"}, "0"); }
inline Morphism example1_f() { return endo("abcd", {"aca", "badc", "acab", "adc"}); }
inline Morphism example1_g() { return endo("xyz", {"xxyx", "yz", "xzxy"}); }

inline Word spell(const D0LSystem& s, std::string_view text) { return s.alphabet().spell(text); }
inline std::string render(const D0LSystem& s, const Word& w) { return s.alphabet().render(w); }

inline Word random_word(std::mt19937& rng, std::size_t alphabet_size, std::size_t length) {
    std::uniform_int_distribution<std::size_t> pick(0, alphabet_size - 1);
    Word w;
    for (std::size_t i = 0; i < length; ++i) {
        w.push_back(letter(pick(rng)));
    }
    return w;
}

inline Morphism random_morphism(std::mt19937& rng, std::size_t max_alphabet = 4, std::size_t max_image = 3) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_alphabet)(rng);
    std::vector<std::string> symbols;
    for (std::size_t i = 0; i < n; ++i) {
        symbols.push_back(std::to_string(i));
    }
    std::vector<Word> images;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_image)(rng);
        images.push_back(random_word(rng, n, len));
    }
    return Morphism::endomorphism(Alphabet(symbols), std::move(images));
}

inline D0LSystem random_system(std::mt19937& rng, std::size_t max_alphabet = 4, std::size_t max_image = 3) {
    Morphism m = random_morphism(rng, max_alphabet, max_image);
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    Word axiom = random_word(rng, m.source().size(), len);
    return D0LSystem(std::move(m), std::move(axiom));
}

/// Bounded iff the orbit of the letter revisits a word within 2 * 4^4 steps
/// without outgrowing the cutoff.
inline bool simulated_bounded(const Morphism& phi, Letter a, std::size_t steps = 512, std::size_t cutoff = 4096) {
    std::vector<Word> orbit{Word{a}};
    for (std::size_t i = 0; i < steps; ++i) {
        Word next = apply(phi, orbit.back());
        if (next.size() > cutoff) {
            return false;
        }
        if (std::find(orbit.begin(), orbit.end(), next) != orbit.end()) {
            return true;
        }
        orbit.push_back(std::move(next));
    }
    return false;
}

}  // namespace d0l::testing
