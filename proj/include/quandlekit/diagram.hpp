#pragma once

#include <optional>
#include <string>
#include <vector>

namespace quandlekit {

// One crossing of an oriented link diagram.  Arcs are numbered 0..arc_count-1;
// the under-strand enters as under_in and leaves as under_out, the over
// strand is the arc passing over.  sign is +1 or -1 (writhe convention).
struct Crossing {
    int sign;
    int over;
    int under_in;
    int under_out;
};

// A component is recorded by its base arc plus the full cyclic arc sequence
// starting at the base, in travel order.
struct ComponentTrace {
    int base;
    std::vector<int> arcs;
};

// Passing under a crossing while walking a component.
struct TraversalEvent {
    int crossing;
    int from_arc;
    int to_arc;
};

// First problem found in raw diagram data, or nullopt.  malformed means the
// data is out of range or misshapen; otherwise it is a consistency failure.
// crossing / component point at the offending entry when one exists, so file
// readers can report the line it came from.
struct DiagramIssue {
    bool malformed;
    std::string message;
    int crossing;
    int component;
};

std::optional<DiagramIssue> validate_diagram(int arc_count, const std::vector<Crossing>& crossings,
                                             const std::vector<ComponentTrace>& components);

// An oriented link diagram, validated on construction:
//  - indices in range, every crossing's under arcs in one component
//  - each arc is under_in of at most one crossing and under_out of at most
//    one (arcs are the segments between undercrossings)
//  - each arc belongs to exactly one component trace
//  - consecutive trace arcs are connected by the crossing structure, and an
//    arc with no undercrossing events forms a whole component by itself
class LinkDiagram {
public:
    LinkDiagram(std::string name, int arc_count, std::vector<Crossing> crossings,
                std::vector<ComponentTrace> components);

    const std::string& name() const { return name_; }
    int arc_count() const { return arc_count_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<ComponentTrace>& components() const { return components_; }
    int component_count() const { return static_cast<int>(components_.size()); }

    int component_of_arc(int arc) const { return arc_component_[arc]; }
    // Crossing where this arc goes under and ends, -1 for a closed loop arc.
    int exit_crossing(int arc) const { return exit_crossing_[arc]; }

    // Undercrossing events along component i, starting at its base arc.
    std::vector<TraversalEvent> traverse(int component) const;
    // Sorted indices of crossings whose under strand lies on component i.
    std::vector<int> crossings_under(int component) const;

    long long writhe() const;

private:
    std::string name_;
    int arc_count_;
    std::vector<Crossing> crossings_;
    std::vector<ComponentTrace> components_;
    std::vector<int> arc_component_;
    std::vector<int> exit_crossing_;
};

} // namespace quandlekit
