#include "d0l/simplify.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "d0l/errors.hpp"

namespace d0l {

namespace {

bool canonical_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

void sort_canonical(std::vector<Word>& ys) {
    std::sort(ys.begin(), ys.end(), canonical_less);
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
}

std::optional<Letter> lowest_erasing_letter(const Morphism& f) {
    for (Letter a : f.source().letters()) {
        if (f.image(a).empty()) {
            return a;
        }
    }
    return std::nullopt;
}

void require_endomorphism(const Morphism& f, const char* op) {
    if (!f.is_endomorphism()) {
        throw PreconditionError(std::string(op) + ": needs an endomorphism");
    }
}

// Rules: drop empty and duplicate words; drop a word that factorizes over
// the others; otherwise split the longer of the two leading words of a
// shortest relation by the shorter one. Every word stays inside the free
// hull of the input, so the final code is its base.
std::vector<Word> reduce_to_code(std::vector<Word> ys) {
    for (;;) {
        std::erase_if(ys, [](const Word& y) { return y.empty(); });
        sort_canonical(ys);
        auto relation = find_code_relation(ys);
        if (!relation) {
            return ys;
        }

        bool dropped = false;
        for (std::size_t i = 0; i < ys.size() && !dropped; ++i) {
            std::vector<Word> others;
            for (std::size_t j = 0; j < ys.size(); ++j) {
                if (j != i) {
                    others.push_back(ys[j]);
                }
            }
            if (factorize(ys[i], others)) {
                ys.erase(ys.begin() + static_cast<std::ptrdiff_t>(i));
                dropped = true;
            }
        }
        if (dropped) {
            continue;
        }

        std::size_t short_i = relation->first.front();
        std::size_t long_i = relation->second.front();
        if (ys[long_i].size() < ys[short_i].size()) {
            std::swap(short_i, long_i);
        }
        const Word& u = ys[short_i];
        Word& v = ys[long_i];
        if (u.size() >= v.size() || !std::equal(u.begin(), u.end(), v.begin())) {
            throw InvariantError("code reduction: relation does not start with a proper prefix");
        }
        v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(u.size()));
    }
}

}  // namespace

std::string_view to_string(SimplificationKind kind) {
    switch (kind) {
        case SimplificationKind::ErasingElimination:
            return "erasing-elimination";
        case SimplificationKind::DuplicateMerge:
            return "duplicate-merge";
        case SimplificationKind::CodeReduction:
            return "code-reduction";
    }
    return "unknown";
}

SimplificationStep::SimplificationStep(Morphism h_, Morphism k_, SimplificationKind kind_, const Morphism& f)
    : h(std::move(h_)), k(std::move(k_)), kind(kind_) {
    if (!(h.source() == f.source()) || !(k.target() == f.source()) || !(h.target() == k.source())) {
        throw InvariantError("simplification step: alphabets do not line up");
    }
    if (h.target().size() >= f.source().size()) {
        throw InvariantError("simplification step: alphabet did not shrink");
    }
    for (Letter a : f.source().letters()) {
        if (apply(k, h.image(a)) != f.image(a)) {
            throw InvariantError("simplification step: k(h(" + f.source().symbol(a) + ")) differs from f");
        }
    }
}

Word SimplificationChain::map_back(const Word& w) const {
    Word cur = w;
    const Alphabet* alphabet = &final_system.alphabet();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        cur = apply(it->k, embed(cur, *alphabet, it->k.source()));
        alphabet = &it->k.target();
    }
    return cur;
}

SimplificationStep eliminate_erasing(const Morphism& f) {
    require_endomorphism(f, "eliminate_erasing");
    const auto z = lowest_erasing_letter(f);
    if (!z) {
        throw PreconditionError("eliminate_erasing: morphism is non-erasing");
    }
    if (f.source().size() < 2) {
        throw PreconditionError("eliminate_erasing: cannot drop the only letter");
    }
    std::vector<std::string> symbols;
    for (Letter a : f.source().letters()) {
        if (a != *z) {
            symbols.push_back(f.source().symbol(a));
        }
    }
    Alphabet smaller(std::move(symbols));

    std::vector<Word> h_images;
    for (Letter a : f.source().letters()) {
        h_images.push_back(a == *z ? Word{} : Word{smaller.at(f.source().symbol(a))});
    }
    std::vector<Word> k_images;
    for (Letter b : smaller.letters()) {
        k_images.push_back(f.image(f.source().at(smaller.symbol(b))));
    }
    return SimplificationStep(Morphism(f.source(), smaller, std::move(h_images)),
                              Morphism(smaller, f.source(), std::move(k_images)),
                              SimplificationKind::ErasingElimination, f);
}

SimplificationStep merge_duplicate_images(const Morphism& f) {
    require_endomorphism(f, "merge_duplicate_images");
    if (f.is_erasing()) {
        throw PreconditionError("merge_duplicate_images: morphism is erasing");
    }
    std::map<Word, Letter> representative;
    std::vector<Letter> reps;
    for (Letter a : f.source().letters()) {
        if (representative.emplace(f.image(a), a).second) {
            reps.push_back(a);
        }
    }
    if (reps.size() == f.source().size()) {
        throw PreconditionError("merge_duplicate_images: images are pairwise distinct");
    }
    std::vector<std::string> symbols;
    for (Letter a : reps) {
        symbols.push_back(f.source().symbol(a));
    }
    Alphabet merged(std::move(symbols));

    std::vector<Word> h_images;
    for (Letter a : f.source().letters()) {
        Letter rep = representative.at(f.image(a));
        h_images.push_back(Word{merged.at(f.source().symbol(rep))});
    }
    std::vector<Word> k_images;
    for (Letter a : reps) {
        k_images.push_back(f.image(a));
    }
    return SimplificationStep(Morphism(f.source(), merged, std::move(h_images)),
                              Morphism(merged, f.source(), std::move(k_images)),
                              SimplificationKind::DuplicateMerge, f);
}

SimplificationStep code_reduce(const Morphism& f) {
    require_endomorphism(f, "code_reduce");
    if (f.is_erasing()) {
        throw PreconditionError("code_reduce: morphism is erasing");
    }
    const std::vector<Word>& xs = f.images();
    std::vector<Word> distinct = xs;
    sort_canonical(distinct);
    if (distinct.size() != xs.size()) {
        throw PreconditionError("code_reduce: images are not pairwise distinct");
    }
    if (!find_code_relation(xs)) {
        throw PreconditionError("code_reduce: images already form a code");
    }

    std::vector<Word> ys = reduce_to_code(xs);
    if (ys.size() >= xs.size()) {
        auto fallback = search_factorizing_basis(xs, xs.size() - 1);
        if (!fallback) {
            throw InvariantError("defect reduction failed");
        }
        ys = std::move(*fallback);
        sort_canonical(ys);
    }

    std::vector<std::string> symbols;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        symbols.push_back("x" + std::to_string(i));
    }
    Alphabet fresh(std::move(symbols));

    std::vector<Word> h_images;
    for (const Word& x : xs) {
        auto parts = factorize(x, ys);
        if (!parts) {
            throw InvariantError("code reduction: image does not factorize over the new base");
        }
        Word encoded;
        for (std::size_t i : *parts) {
            encoded.push_back(letter(i));
        }
        h_images.push_back(std::move(encoded));
    }
    return SimplificationStep(Morphism(f.source(), fresh, std::move(h_images)),
                              Morphism(fresh, f.source(), ys), SimplificationKind::CodeReduction, f);
}

std::optional<std::vector<std::size_t>> factorize(const Word& w, std::span<const Word> basis) {
    const std::size_t n = w.size();
    // choice[i]: basis index starting a factorization of w[i..], or npos.
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> choice(n + 1, npos);
    std::vector<bool> ok(n + 1, false);
    ok[n] = true;
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Word& y = basis[b];
            if (y.empty() || i + y.size() > n || !ok[i + y.size()]) {
                continue;
            }
            if (std::equal(y.begin(), y.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) {
                ok[i] = true;
                choice[i] = b;
                break;
            }
        }
    }
    if (!ok[0]) {
        return std::nullopt;
    }
    std::vector<std::size_t> parts;
    for (std::size_t i = 0; i < n; i += basis[choice[i]].size()) {
        parts.push_back(choice[i]);
    }
    return parts;
}

std::optional<std::vector<Word>> search_factorizing_basis(std::span<const Word> words, std::size_t max_size) {
    std::vector<Word> candidates;
    for (const Word& w : words) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = i + 1; j <= w.size(); ++j) {
                candidates.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(i),
                                        w.begin() + static_cast<std::ptrdiff_t>(j));
            }
        }
    }
    sort_canonical(candidates);

    auto covers = [&](const std::vector<Word>& basis) {
        return std::all_of(words.begin(), words.end(),
                           [&](const Word& w) { return factorize(w, basis).has_value(); });
    };

    for (bool need_code : {true, false}) {
        for (std::size_t size = 1; size <= std::min(max_size, candidates.size()); ++size) {
            std::vector<std::size_t> pick(size);
            for (std::size_t i = 0; i < size; ++i) {
                pick[i] = i;
            }
            for (;;) {
                std::vector<Word> basis;
                for (std::size_t i : pick) {
                    basis.push_back(candidates[i]);
                }
                if (covers(basis) && (!need_code || !find_code_relation(basis))) {
                    return basis;
                }
                // next combination
                std::size_t i = size;
                while (i > 0 && pick[i - 1] == candidates.size() - size + (i - 1)) {
                    --i;
                }
                if (i == 0) {
                    break;
                }
                ++pick[i - 1];
                for (std::size_t j = i; j < size; ++j) {
                    pick[j] = pick[j - 1] + 1;
                }
            }
        }
    }
    return std::nullopt;
}

SimplificationChain injective_simplification(const D0LSystem& system) {
    SimplificationChain chain{system, {}, system};
    D0LSystem current = system;
    while (!is_injective(current.morphism())) {
        const Morphism& f = current.morphism();
        std::vector<Word> distinct = f.images();
        sort_canonical(distinct);

        std::optional<SimplificationStep> step;
        if (f.is_erasing()) {
            step = eliminate_erasing(f);
        } else if (distinct.size() < f.images().size()) {
            step = merge_duplicate_images(f);
        } else {
            step = code_reduce(f);
        }

        Word axiom = apply(step->h, current.axiom());
        if (axiom.empty()) {
            throw InvariantError("simplification erased the whole axiom");
        }
        D0LSystem next(step->simplified(), std::move(axiom));
        chain.steps.push_back(std::move(*step));
        current = reduce(next);
        if (chain.steps.size() > system.alphabet().size()) {
            throw InvariantError("simplification chain longer than the alphabet");
        }
    }
    chain.final_system = current;
    return chain;
}

}  // namespace d0l
