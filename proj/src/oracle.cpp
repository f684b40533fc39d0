#include "d0l/oracle.hpp"

#include <algorithm>
#include <limits>

#include "d0l/errors.hpp"

namespace d0l::oracle {

namespace {

void merge_max(PowerProfile& into, const PowerProfile& from) {
    for (const auto& [v, p] : from) {
        auto& slot = into[v];
        slot = std::max(slot, p);
    }
}

}  // namespace

void OracleParams::validate() const {
    if (depth < 1 || max_len < 1 || power_threshold < 2) {
        throw PreconditionError("oracle parameters need depth >= 1, max_len >= 1, power_threshold >= 2");
    }
}

std::vector<Word> iterates(const D0LSystem& system, std::size_t depth, std::size_t length_cap) {
    std::vector<Word> out{system.axiom()};
    for (std::size_t n = 1; n <= depth; ++n) {
        const Word& prev = out.back();
        std::size_t len = 0;
        for (Letter a : prev) {
            len += system.morphism().image(a).size();
        }
        if (len > length_cap) {
            throw ResourceError("iterate " + std::to_string(n) + " has " + std::to_string(len) +
                                " letters, over the cap of " + std::to_string(length_cap));
        }
        out.push_back(apply(system.morphism(), prev));
    }
    return out;
}

std::size_t affordable_depth(const D0LSystem& system, std::size_t length_cap, std::size_t max_depth) {
    const Morphism& phi = system.morphism();
    std::vector<std::size_t> counts(system.alphabet().size(), 0);
    for (Letter a : system.axiom()) {
        ++counts[index(a)];
    }
    for (std::size_t n = 1; n <= max_depth; ++n) {
        std::vector<std::size_t> next(counts.size(), 0);
        std::size_t total = 0;
        for (std::size_t b = 0; b < counts.size(); ++b) {
            for (Letter c : phi.image(letter(b))) {
                next[index(c)] += counts[b];
                total += counts[b];
            }
        }
        if (total > length_cap) {
            return n - 1;
        }
        counts = std::move(next);
    }
    return max_depth;
}

std::set<Word> factors_up_to(const D0LSystem& system, const OracleParams& params) {
    params.validate();
    std::set<Word> out;
    for (const Word& w : iterates(system, params.depth, params.length_cap)) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t len = 1; len <= params.max_len && i + len <= w.size(); ++len) {
                out.emplace(w.begin() + static_cast<std::ptrdiff_t>(i),
                            w.begin() + static_cast<std::ptrdiff_t>(i + len));
            }
        }
    }
    return out;
}

std::size_t max_power_in(const Word& text, const Word& v) {
    if (v.empty()) {
        throw PreconditionError("max_power: empty word");
    }
    const std::size_t p = v.size();
    if (text.size() < p) {
        return 0;
    }
    // run[i]: number of consecutive copies of v starting at i
    std::vector<std::size_t> run(text.size() + p, 0);
    std::size_t best = 0;
    for (std::size_t i = text.size() - p + 1; i-- > 0;) {
        if (std::equal(v.begin(), v.end(), text.begin() + static_cast<std::ptrdiff_t>(i))) {
            run[i] = 1 + run[i + p];
            best = std::max(best, run[i]);
        }
    }
    return best;
}

std::size_t max_power(const D0LSystem& system, const Word& v, const OracleParams& params) {
    params.validate();
    if (v.empty() || v.size() > params.max_len || !is_primitive(v)) {
        throw PreconditionError("max_power: expects a primitive word no longer than max_len");
    }
    std::size_t best = 0;
    for (const Word& w : iterates(system, params.depth, params.length_cap)) {
        best = std::max(best, max_power_in(w, v));
    }
    return best;
}

PowerProfile power_profile(const Word& text, std::size_t max_len) {
    PowerProfile out;
    const std::size_t n = text.size();
    for (std::size_t p = 1; p <= max_len; ++p) {
        std::size_t i = 0;
        while (i + p < n) {
            if (text[i] != text[i + p]) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j + p < n && text[j] == text[j + p]) {
                ++j;
            }
            // text[i, j + p) has period p
            const std::size_t span = j - i + p;
            for (std::size_t o = 0; o < p && span - o >= 2 * p; ++o) {
                Word v(text.begin() + static_cast<std::ptrdiff_t>(i + o),
                       text.begin() + static_cast<std::ptrdiff_t>(i + o + p));
                if (!is_primitive(v)) {
                    continue;
                }
                auto& slot = out[v];
                slot = std::max(slot, (span - o) / p);
            }
            i = j + 1;
        }
    }
    return out;
}

PowerProfile power_profile(const D0LSystem& system, const OracleParams& params) {
    params.validate();
    PowerProfile out;
    for (const Word& w : iterates(system, params.depth, params.length_cap)) {
        merge_max(out, power_profile(w, params.max_len));
    }
    return out;
}

std::set<Word> observed_classes(const D0LSystem& system, const OracleParams& params) {
    params.validate();
    // A bounded power can first show up anywhere in the window. Demanding
    // growth past both checkpoints keeps late one-off jumps out.
    const std::size_t half = (params.depth + 1) / 2;
    const std::size_t three_quarters = (3 * params.depth + 3) / 4;
    PowerProfile early;
    PowerProfile middle;
    PowerProfile late;
    const auto words = iterates(system, params.depth, params.length_cap);
    for (std::size_t n = 0; n < words.size(); ++n) {
        PowerProfile here = power_profile(words[n], params.max_len);
        if (n <= half) {
            merge_max(early, here);
        }
        if (n <= three_quarters) {
            merge_max(middle, here);
        }
        merge_max(late, here);
    }
    auto at = [](const PowerProfile& profile, const Word& v) {
        auto it = profile.find(v);
        return it == profile.end() ? std::size_t{0} : it->second;
    };
    std::set<Word> out;
    for (const auto& [v, p] : late) {
        if (p >= params.power_threshold && p > at(early, v) && p > at(middle, v)) {
            out.insert(canonical_rotation(v));
        }
    }
    return out;
}

CrossCheck cross_check(const std::vector<Word>& reported, const std::set<Word>& observed, std::size_t max_len) {
    CrossCheck out;
    std::set<Word> mine;
    for (const Word& w : reported) {
        mine.insert(w);
        if (w.size() <= max_len && !observed.contains(w)) {
            out.unconfirmed.push_back(w);
        }
    }
    for (const Word& w : observed) {
        if (!mine.contains(w)) {
            out.unreported.push_back(w);
        }
    }
    return out;
}

}  // namespace d0l::oracle
