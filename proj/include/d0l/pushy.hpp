#pragma once

#include <map>
#include <vector>

#include "d0l/morphism.hpp"

namespace d0l {

enum class Side { Left, Right };

struct SideEdge {
    Letter target;
    Word label;  // bounded letters only
};

/// Graph of unbounded letters to one side. Every vertex has exactly one
/// outgoing edge: to the last (Right) or first (Left) unbounded letter of its
/// image, labelled with the bounded suffix (Right) or prefix (Left) shed.
struct SideGraph {
    Side side;
    std::vector<Letter> vertices;
    std::map<Letter, SideEdge> edges;
};

/// vertices[i] -> vertices[i+1] carries labels[i]; the last edge closes the cycle.
struct SideCycle {
    Side side;
    std::vector<Letter> vertices;
    std::vector<Word> labels;
};

struct BoundedPeriod {
    SideCycle cycle;
    Word period;  // primitive, bounded letters only
};

SideGraph build_side_graph(const D0LSystem& system, Side side);
SideGraph build_side_graph(const D0LSystem& system, Side side, const LetterClassification& letters);

/// One entry per cycle, starting at its lowest-id vertex.
std::vector<SideCycle> cycles(const SideGraph& graph);

bool is_pushy(const D0LSystem& system);

/// Word shed along a full turn of the cycle from its entry vertex:
/// u_k phi(u_{k-1}) ... phi^{k-1}(u_1) on the right, its mirror on the left.
Word cycle_word(const Morphism& phi, const SideCycle& cycle);

/// Periods of the eventually periodic words built from each cycle that sheds
/// an immortal label.
std::vector<BoundedPeriod> bounded_periodic_classes(const D0LSystem& system);

}  // namespace d0l
