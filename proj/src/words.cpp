#include "d0l/words.hpp"

#include <algorithm>
#include <cctype>

#include "d0l/errors.hpp"

namespace d0l {

namespace {

bool has_space(std::string_view s) {
    return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

void require_non_empty(const Word& w, const char* op) {
    if (w.empty()) {
        throw PreconditionError(std::string(op) + ": empty word");
    }
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
        throw DomainError("alphabet must not be empty");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const std::string& s = symbols_[i];
        if (s.empty() || has_space(s)) {
            throw DomainError("invalid letter symbol '" + s + "'");
        }
        if (!lookup_.emplace(s, letter(i)).second) {
            throw DomainError("duplicate letter symbol '" + s + "'");
        }
    }
}

std::vector<Letter> Alphabet::letters() const {
    std::vector<Letter> out;
    out.reserve(symbols_.size());
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        out.push_back(letter(i));
    }
    return out;
}

const std::string& Alphabet::symbol(Letter a) const {
    if (!contains(a)) {
        throw DomainError("letter id " + std::to_string(index(a)) + " outside alphabet");
    }
    return symbols_[index(a)];
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
    auto it = lookup_.find(std::string(symbol));
    if (it == lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Letter Alphabet::at(std::string_view symbol) const {
    if (auto a = find(symbol)) {
        return *a;
    }
    throw DomainError("unknown letter '" + std::string(symbol) + "'");
}

Word Alphabet::spell(std::string_view text) const {
    Word w;
    if (has_space(text)) {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
            }
            std::size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            if (j > i) {
                w.push_back(at(text.substr(i, j - i)));
            }
            i = j;
        }
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) {
            w.push_back(at(text.substr(i, 1)));
        }
    }
    return w;
}

std::string Alphabet::render(const Word& w) const {
    const bool compact = std::all_of(symbols_.begin(), symbols_.end(),
                                     [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i > 0) {
            out += ' ';
        }
        out += symbol(w[i]);
    }
    return out;
}

Word power(const Word& w, std::size_t m) {
    Word out;
    out.reserve(w.size() * m);
    for (std::size_t i = 0; i < m; ++i) {
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

Word primitive_root(const Word& w) {
    require_non_empty(w, "primitive_root");
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) {
            continue;
        }
        if (std::equal(w.begin() + static_cast<std::ptrdiff_t>(p), w.end(), w.begin())) {
            return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        }
    }
    return w;
}

bool is_primitive(const Word& w) { return primitive_root(w).size() == w.size(); }

std::set<Word> conjugates(const Word& w) {
    require_non_empty(w, "conjugates");
    std::set<Word> out;
    Word r = w;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.insert(r);
        std::rotate(r.begin(), r.begin() + 1, r.end());
    }
    return out;
}

bool are_conjugate(const Word& u, const Word& v) {
    if (u.size() != v.size()) {
        return false;
    }
    if (u.empty()) {
        return true;
    }
    Word vv = v;
    vv.insert(vv.end(), v.begin(), v.end());
    return is_factor(vv, u);
}

Word canonical_rotation(const Word& w) {
    require_non_empty(w, "canonical_rotation");
    Word best = w;
    Word r = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        if (r < best) {
            best = r;
        }
    }
    return best;
}

std::optional<std::size_t> exact_power_of(const Word& w, const Word& v) {
    if (v.empty()) {
        throw PreconditionError("exact_power_of: empty base word");
    }
    if (w.size() % v.size() != 0) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != v[i % v.size()]) {
            return std::nullopt;
        }
    }
    return w.size() / v.size();
}

std::vector<std::size_t> factor_occurrences(const Word& text, const Word& pattern) {
    if (pattern.empty()) {
        throw PreconditionError("factor_occurrences: empty pattern");
    }
    std::vector<std::size_t> out;
    if (pattern.size() > text.size()) {
        return out;
    }
    for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
        if (std::equal(pattern.begin(), pattern.end(), text.begin() + static_cast<std::ptrdiff_t>(i))) {
            out.push_back(i);
        }
    }
    return out;
}

bool is_factor(const Word& text, const Word& pattern) {
    if (pattern.empty()) {
        return true;
    }
    return std::search(text.begin(), text.end(), pattern.begin(), pattern.end()) != text.end();
}

}  // namespace d0l
