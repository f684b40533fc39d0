#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace d0l {

/// A letter is an index into the symbol table of some Alphabet.
enum class Letter : std::uint32_t {};

constexpr Letter letter(std::size_t id) { return static_cast<Letter>(id); }
constexpr std::size_t index(Letter a) { return static_cast<std::size_t>(a); }

/// Finite word. Comparison of words is lexicographic by letter id.
using Word = std::vector<Letter>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (Letter a : w) {
            h ^= index(a) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

/// Ordered table of distinct, non-empty, whitespace-free symbols.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    std::vector<Letter> letters() const;

    const std::string& symbol(Letter a) const;
    bool contains(Letter a) const noexcept { return index(a) < symbols_.size(); }
    std::optional<Letter> find(std::string_view symbol) const;
    /// Throws DomainError for unknown symbols.
    Letter at(std::string_view symbol) const;

    /// Reads a word: whitespace-separated tokens if the text contains
    /// whitespace, otherwise one symbol per character.
    Word spell(std::string_view text) const;
    /// Inverse of spell(): symbols are concatenated when every symbol is a
    /// single character, and separated by spaces otherwise.
    std::string render(const Word& w) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, Letter> lookup_;
};

Word power(const Word& w, std::size_t m);

/// Shortest x with w = x^m. Throws PreconditionError on the empty word.
Word primitive_root(const Word& w);
bool is_primitive(const Word& w);

/// All rotations of w, without duplicates.
std::set<Word> conjugates(const Word& w);
bool are_conjugate(const Word& u, const Word& v);

/// Lexicographically least rotation, by letter id.
Word canonical_rotation(const Word& w);

/// m such that w = v^m, if any.
std::optional<std::size_t> exact_power_of(const Word& w, const Word& v);

/// Start positions (ascending, possibly overlapping) of pattern in text.
std::vector<std::size_t> factor_occurrences(const Word& text, const Word& pattern);

bool is_factor(const Word& text, const Word& pattern);

}  // namespace d0l
