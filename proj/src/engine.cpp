#include "d0l/engine.hpp"

#include <algorithm>
#include <map>

#include "d0l/errors.hpp"
#include "d0l/pushy.hpp"
#include "d0l/unbounded.hpp"

namespace d0l {

namespace {

// Adds phi-images until the set is closed. On an injective system the classes
// form disjoint cycles, and a cycle shedding a bounded period only hands us
// one of its members.
std::set<Word> close_under_image(const Morphism& phi, std::set<Word> classes) {
    std::vector<Word> pending(classes.begin(), classes.end());
    while (!pending.empty()) {
        Word w = std::move(pending.back());
        pending.pop_back();
        Word next = class_key(apply(phi, w));
        if (classes.insert(next).second) {
            pending.push_back(std::move(next));
        }
    }
    return classes;
}

ClassSource source_of(const Word& w, const LetterClassification& letters) {
    return std::all_of(w.begin(), w.end(), [&](Letter a) { return letters.is_bounded(a); }) ? ClassSource::Bounded
                                                                                         : ClassSource::Unbounded;
}

}  // namespace

Word class_key(const Word& w) { return canonical_rotation(primitive_root(w)); }

AnalysisReport analyze(const D0LSystem& system) {
    const D0LSystem reduced = reduce(system);
    AnalysisReport report{system, SimplificationChain{reduced, {}, reduced}, bounded_letters(system.morphism()),
                          false, false, false, {}, {}};

    if (bounded_letters(reduced.morphism()).unbounded.empty()) {
        return report;  // finite language
    }

    report.chain = injective_simplification(reduced);
    report.chain.final_system = reduce(report.chain.final_system);
    const D0LSystem& last = report.chain.final_system;

    std::set<Word> found;
    for (const BoundedPeriod& p : bounded_periodic_classes(last)) {
        found.insert(class_key(p.period));
    }
    for (const Word& v : unbounded_periodic_classes(last)) {
        found.insert(class_key(v));
    }
    found = close_under_image(last.morphism(), std::move(found));
    report.final_classes.assign(found.begin(), found.end());

    std::set<Word> mapped;
    for (const Word& w : report.final_classes) {
        Word back = report.chain.map_back(w);
        if (back.empty()) {
            throw InvariantError("periodic factor vanished while mapping back");
        }
        mapped.insert(class_key(embed(back, reduced.alphabet(), system.alphabet())));
    }
    for (const Word& rep : mapped) {
        report.classes.push_back(
            PeriodicFactorClass{rep, conjugates(rep), source_of(rep, report.classification)});
    }

    report.pushy = is_pushy(last);
    report.repetitive = !report.classes.empty();
    report.strongly_repetitive = report.repetitive;
    if (report.pushy && !report.repetitive) {
        throw InvariantError("pushy system without periodic factors");
    }
    return report;
}

bool is_repetitive(const D0LSystem& system) { return analyze(system).repetitive; }

PeriodicFactorGraph periodic_factor_graph(const AnalysisReport& report) {
    const Morphism& phi = report.chain.final_system.morphism();
    PeriodicFactorGraph graph{report.final_classes, {}};
    std::map<Word, std::size_t> position;
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        position.emplace(graph.vertices[i], i);
    }
    std::vector<std::size_t> indegree(graph.vertices.size(), 0);
    for (const Word& v : graph.vertices) {
        auto it = position.find(class_key(apply(phi, v)));
        if (it == position.end()) {
            throw InvariantError("periodic factor graph: image class is not a vertex");
        }
        graph.successor.push_back(it->second);
        ++indegree[it->second];
    }
    if (std::any_of(indegree.begin(), indegree.end(), [](std::size_t d) { return d != 1; })) {
        throw InvariantError("periodic factor graph is not 1-regular");
    }
    return graph;
}

}  // namespace d0l
