#include "d0l/pushy.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "d0l/errors.hpp"

namespace d0l {

namespace {

bool has_immortal_letter(const Word& w, const std::set<Letter>& mortal) {
    return std::any_of(w.begin(), w.end(), [&](Letter a) { return !mortal.contains(a); });
}

bool sheds_immortal_label(const SideCycle& c, const std::set<Letter>& mortal) {
    return std::any_of(c.labels.begin(), c.labels.end(),
                       [&](const Word& label) { return has_immortal_letter(label, mortal); });
}

}  // namespace

SideGraph build_side_graph(const D0LSystem& system, Side side) {
    return build_side_graph(system, side, bounded_letters(system.morphism()));
}

SideGraph build_side_graph(const D0LSystem& system, Side side, const LetterClassification& letters) {
    const Morphism& phi = system.morphism();
    if (phi.is_erasing()) {
        throw PreconditionError("build_side_graph: morphism is erasing");
    }
    SideGraph graph{side, {}, {}};
    for (Letter a : letters.unbounded) {
        const Word& img = phi.image(a);
        auto unbounded = [&](Letter b) { return !letters.is_bounded(b); };
        if (side == Side::Right) {
            auto it = std::find_if(img.rbegin(), img.rend(), unbounded);
            if (it == img.rend()) {
                throw InvariantError("unbounded letter with an image of bounded letters");
            }
            Word label(it.base(), img.end());
            graph.edges.emplace(a, SideEdge{*it, std::move(label)});
        } else {
            auto it = std::find_if(img.begin(), img.end(), unbounded);
            if (it == img.end()) {
                throw InvariantError("unbounded letter with an image of bounded letters");
            }
            Word label(img.begin(), it);
            graph.edges.emplace(a, SideEdge{*it, std::move(label)});
        }
        graph.vertices.push_back(a);
    }
    return graph;
}

std::vector<SideCycle> cycles(const SideGraph& graph) {
    enum class Mark { Fresh, OnPath, Done };
    std::map<Letter, Mark> mark;
    for (Letter v : graph.vertices) {
        mark[v] = Mark::Fresh;
    }

    std::vector<SideCycle> out;
    for (Letter start : graph.vertices) {
        std::vector<Letter> path;
        Letter v = start;
        while (mark.at(v) == Mark::Fresh) {
            mark[v] = Mark::OnPath;
            path.push_back(v);
            v = graph.edges.at(v).target;
        }
        if (mark.at(v) == Mark::OnPath) {
            auto first = std::find(path.begin(), path.end(), v);
            std::vector<Letter> ring(first, path.end());
            std::rotate(ring.begin(), std::min_element(ring.begin(), ring.end()), ring.end());
            SideCycle c{graph.side, ring, {}};
            for (Letter u : ring) {
                c.labels.push_back(graph.edges.at(u).label);
            }
            out.push_back(std::move(c));
        }
        for (Letter u : path) {
            mark[u] = Mark::Done;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const SideCycle& a, const SideCycle& b) { return a.vertices.front() < b.vertices.front(); });
    return out;
}

bool is_pushy(const D0LSystem& system) {
    const auto letters = bounded_letters(system.morphism());
    for (Side side : {Side::Left, Side::Right}) {
        for (const SideCycle& c : cycles(build_side_graph(system, side, letters))) {
            if (sheds_immortal_label(c, letters.mortal)) {
                return true;
            }
        }
    }
    return false;
}

Word cycle_word(const Morphism& phi, const SideCycle& cycle) {
    const std::size_t k = cycle.labels.size();
    Word out;
    auto append = [&](std::size_t j) {  // phi^{k-j}(u_j), labels are 1-based here
        Word part = iterate(phi, cycle.labels[j - 1], k - j);
        out.insert(out.end(), part.begin(), part.end());
    };
    if (cycle.side == Side::Right) {
        for (std::size_t j = k; j >= 1; --j) {
            append(j);
        }
    } else {
        for (std::size_t j = 1; j <= k; ++j) {
            append(j);
        }
    }
    return out;
}

std::vector<BoundedPeriod> bounded_periodic_classes(const D0LSystem& system) {
    const Morphism& phi = system.morphism();
    const auto letters = bounded_letters(phi);
    std::vector<BoundedPeriod> out;
    for (Side side : {Side::Left, Side::Right}) {
        for (SideCycle& c : cycles(build_side_graph(system, side, letters))) {
            if (!sheds_immortal_label(c, letters.mortal)) {
                continue;
            }
            const std::size_t k = c.vertices.size();

            // orbit of the shed word is finite: it only has bounded letters
            std::vector<Word> orbit;
            std::unordered_map<Word, std::size_t, WordHash> seen;
            Word cur = cycle_word(phi, c);
            while (!seen.contains(cur)) {
                seen.emplace(cur, orbit.size());
                orbit.push_back(cur);
                cur = apply(phi, cur);
            }
            const std::size_t s = seen.at(cur);
            const std::size_t t = orbit.size() - s;
            auto at = [&](std::size_t e) -> const Word& { return e < orbit.size() ? orbit[e] : orbit[s + (e - s) % t]; };

            const std::size_t l0 = (s + k - 1) / k;
            const std::size_t l1 = l0 + std::lcm(t, k) / k;
            Word period;
            for (std::size_t i = 0; i < l1 - l0; ++i) {
                const std::size_t l = side == Side::Right ? l0 + 1 + i : l1 - i;
                const Word& block = at(l * k);
                period.insert(period.end(), block.begin(), block.end());
            }
            if (period.empty()) {
                throw InvariantError("empty period for a cycle with an immortal label");
            }
            out.push_back(BoundedPeriod{std::move(c), primitive_root(period)});
        }
    }
    return out;
}

}  // namespace d0l
