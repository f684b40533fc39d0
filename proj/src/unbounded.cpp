#include "d0l/unbounded.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "d0l/errors.hpp"

namespace d0l {

namespace {

using Count = std::uint64_t;
constexpr Count kSaturated = std::numeric_limits<Count>::max();

// Longest word this module is willing to stream letter by letter.
constexpr Count kStreamCap = Count{1} << 27;

Count add_sat(Count a, Count b) { return a > kSaturated - b ? kSaturated : a + b; }

// Letter counts of phi(w) from the letter counts of w.
std::vector<Count> parikh_image(const Morphism& phi, const std::vector<Count>& counts) {
    std::vector<Count> out(counts.size(), 0);
    for (std::size_t b = 0; b < counts.size(); ++b) {
        if (counts[b] == 0) {
            continue;
        }
        for (Letter c : phi.image(letter(b))) {
            out[index(c)] = add_sat(out[index(c)], counts[b]);
        }
    }
    return out;
}

// |phi^n(b)| for every letter b.
std::vector<Count> image_lengths(const Morphism& phi, std::size_t n) {
    std::vector<Count> len(phi.source().size(), 1);
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<Count> next(len.size(), 0);
        for (std::size_t b = 0; b < len.size(); ++b) {
            for (Letter c : phi.image(letter(b))) {
                next[b] = add_sat(next[b], len[index(c)]);
            }
        }
        len = std::move(next);
    }
    return len;
}

// Feeds phi^depth(a) to `sink` letter by letter until the sink returns false.
bool stream_iterate(const Morphism& phi, Letter a, std::size_t depth, const std::function<bool(Letter)>& sink) {
    if (depth == 0) {
        return sink(a);
    }
    for (Letter c : phi.image(a)) {
        if (!stream_iterate(phi, c, depth - 1, sink)) {
            return false;
        }
    }
    return true;
}

Letter first_after(const Morphism& phi, Letter a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        a = first_letter(phi, a);
    }
    return a;
}

}  // namespace

std::vector<FirstLetterCycleCandidate> first_letter_candidates(const D0LSystem& system) {
    const Morphism& phi = system.morphism();
    if (phi.is_erasing()) {
        throw PreconditionError("first_letter_candidates: morphism is erasing");
    }
    const auto letters = bounded_letters(phi);
    const std::size_t n = phi.source().size();
    std::vector<FirstLetterCycleCandidate> out;
    for (Letter a : letters.unbounded) {
        Letter b = a;
        for (std::size_t l = 1; l <= n; ++l) {
            b = first_letter(phi, b);
            if (b == a) {
                out.push_back({a, l});
                break;
            }
        }
    }
    return out;
}

std::optional<Word> lando_periodic_check(const Morphism& phi, std::size_t period, Letter a) {
    return lando_periodic_check(phi, period, a, bounded_letters(phi));
}

std::optional<Word> lando_periodic_check(const Morphism& phi, std::size_t period, Letter a,
                                         const LetterClassification& letters) {
    if (period == 0 || phi.is_erasing() || first_after(phi, a, period) != a) {
        throw PreconditionError("lando_periodic_check: '" + phi.source().symbol(a) +
                                "' is not the first letter of its own image under phi^" + std::to_string(period));
    }
    if (letters.is_bounded(a)) {
        throw PreconditionError("lando_periodic_check: '" + phi.source().symbol(a) + "' is bounded");
    }
    const std::size_t n = phi.source().size();

    // Step 1: least s <= #A with some unbounded letter occurring twice in psi^s(a).
    std::vector<Count> counts(n, 0);
    counts[index(a)] = 1;
    std::size_t s = 0;
    for (std::size_t candidate = 1; candidate <= n && s == 0; ++candidate) {
        for (std::size_t i = 0; i < period; ++i) {
            counts = parikh_image(phi, counts);
        }
        for (Letter c : letters.unbounded) {
            if (counts[index(c)] >= 2) {
                s = candidate;
                break;
            }
        }
    }
    if (s == 0) {
        return std::nullopt;
    }

    // Step 2: a itself must repeat.
    if (counts[index(a)] < 2) {
        return std::nullopt;
    }

    // Step 3: v is the prefix of psi^s(a) that ends right before the second a.
    Word v;
    std::size_t seen_a = 0;
    stream_iterate(phi, a, period * s, [&](Letter c) {
        if (c == a && ++seen_a == 2) {
            return false;
        }
        if (v.size() >= kStreamCap) {
            throw ResourceError("lando_periodic_check: periodic prefix too long");
        }
        v.push_back(c);
        return true;
    });

    const auto lengths = image_lengths(phi, period);
    Count total = 0;
    for (Letter c : v) {
        total = add_sat(total, lengths[index(c)]);
    }
    if (total % v.size() != 0) {
        return std::nullopt;
    }
    if (total > kStreamCap) {
        throw ResourceError("lando_periodic_check: image of the periodic prefix too long");
    }

    std::size_t pos = 0;
    bool matches = true;
    for (Letter c : v) {
        stream_iterate(phi, c, period, [&](Letter d) {
            if (d != v[pos % v.size()]) {
                matches = false;
                return false;
            }
            ++pos;
            return true;
        });
        if (!matches) {
            return std::nullopt;
        }
    }
    if (total / v.size() < 2) {
        throw InvariantError("periodic point of an unbounded letter does not grow");
    }
    return v;
}

std::vector<Word> unbounded_periodic_classes(const D0LSystem& system) {
    const Morphism& phi = system.morphism();
    const auto letters = bounded_letters(phi);
    std::vector<Word> out;
    for (const auto& candidate : first_letter_candidates(system)) {
        if (auto v = lando_periodic_check(phi, candidate.period, candidate.letter, letters)) {
            Word root = primitive_root(*v);
            if (std::find(out.begin(), out.end(), root) == out.end()) {
                out.push_back(std::move(root));
            }
        }
    }
    return out;
}

}  // namespace d0l
