#include "quandlekit/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "quandlekit/errors.hpp"

namespace quandlekit {

// Shared by the constructor and the file reader; the reader uses the crossing
// or component index to attach a line number to the message.
std::optional<DiagramIssue> validate_diagram(int arc_count, const std::vector<Crossing>& crossings,
                                             const std::vector<ComponentTrace>& components) {
    if (arc_count < 1)
        return DiagramIssue{true, "diagram needs at least one arc", -1, -1};
    for (size_t c = 0; c < crossings.size(); ++c) {
        const Crossing& cr = crossings[c];
        int ci = static_cast<int>(c);
        if (cr.sign != 1 && cr.sign != -1)
            return DiagramIssue{true,
                                "crossing " + std::to_string(c) + " has sign " +
                                    std::to_string(cr.sign) + ", expected +1 or -1",
                                ci, -1};
        for (int arc : {cr.over, cr.under_in, cr.under_out})
            if (arc < 0 || arc >= arc_count)
                return DiagramIssue{true,
                                    "crossing " + std::to_string(c) + " references arc " +
                                        std::to_string(arc) + ", outside 0.." +
                                        std::to_string(arc_count - 1),
                                    ci, -1};
    }

    std::vector<int> exit_crossing(arc_count, -1), entry_crossing(arc_count, -1);
    for (size_t c = 0; c < crossings.size(); ++c) {
        const Crossing& cr = crossings[c];
        int ci = static_cast<int>(c);
        if (exit_crossing[cr.under_in] != -1)
            return DiagramIssue{false,
                                "arc " + std::to_string(cr.under_in) +
                                    " goes under both crossings " +
                                    std::to_string(exit_crossing[cr.under_in]) + " and " +
                                    std::to_string(c) + " as the incoming strand",
                                ci, -1};
        exit_crossing[cr.under_in] = ci;
        if (entry_crossing[cr.under_out] != -1)
            return DiagramIssue{false,
                                "arc " + std::to_string(cr.under_out) +
                                    " emerges from both crossings " +
                                    std::to_string(entry_crossing[cr.under_out]) + " and " +
                                    std::to_string(c),
                                ci, -1};
        entry_crossing[cr.under_out] = ci;
    }

    std::vector<int> arc_component(arc_count, -1);
    for (size_t i = 0; i < components.size(); ++i) {
        const ComponentTrace& comp = components[i];
        int ii = static_cast<int>(i);
        if (comp.arcs.empty())
            return DiagramIssue{true, "component " + std::to_string(i) + " has an empty trace",
                                -1, ii};
        if (comp.arcs.front() != comp.base)
            return DiagramIssue{false,
                                "component " + std::to_string(i) +
                                    " trace must start at base arc " + std::to_string(comp.base),
                                -1, ii};
        for (int arc : comp.arcs) {
            if (arc < 0 || arc >= arc_count)
                return DiagramIssue{true,
                                    "component " + std::to_string(i) + " references arc " +
                                        std::to_string(arc),
                                    -1, ii};
            if (arc_component[arc] != -1)
                return DiagramIssue{
                    false, "arc " + std::to_string(arc) + " appears in two component traces", -1,
                    ii};
            arc_component[arc] = ii;
        }
        for (size_t k = 0; k < comp.arcs.size(); ++k) {
            int arc = comp.arcs[k];
            int next = comp.arcs[(k + 1) % comp.arcs.size()];
            int c = exit_crossing[arc];
            if (c == -1) {
                if (comp.arcs.size() != 1)
                    return DiagramIssue{false,
                                        "arc " + std::to_string(arc) +
                                            " never goes under a crossing but component " +
                                            std::to_string(i) + " continues to arc " +
                                            std::to_string(next),
                                        -1, ii};
            } else if (crossings[c].under_out != next) {
                return DiagramIssue{false,
                                    "component " + std::to_string(i) + " trace jumps from arc " +
                                        std::to_string(arc) + " to arc " + std::to_string(next) +
                                        " but crossing " + std::to_string(c) +
                                        " continues it as arc " +
                                        std::to_string(crossings[c].under_out),
                                    -1, ii};
            }
        }
    }
    for (int arc = 0; arc < arc_count; ++arc)
        if (arc_component[arc] == -1)
            return DiagramIssue{false, "arc " + std::to_string(arc) + " belongs to no component",
                                -1, -1};
    return std::nullopt;
}

LinkDiagram::LinkDiagram(std::string name, int arc_count, std::vector<Crossing> crossings,
                         std::vector<ComponentTrace> components)
    : name_(std::move(name)), arc_count_(arc_count), crossings_(std::move(crossings)),
      components_(std::move(components)) {
    auto issue = validate_diagram(arc_count_, crossings_, components_);
    if (issue) {
        if (issue->malformed)
            throw MalformedInput(issue->message);
        throw ValidationFailure(issue->message);
    }
    arc_component_.assign(arc_count_, -1);
    exit_crossing_.assign(arc_count_, -1);
    for (size_t c = 0; c < crossings_.size(); ++c)
        exit_crossing_[crossings_[c].under_in] = static_cast<int>(c);
    for (size_t i = 0; i < components_.size(); ++i)
        for (int arc : components_[i].arcs)
            arc_component_[arc] = static_cast<int>(i);
}

std::vector<TraversalEvent> LinkDiagram::traverse(int component) const {
    const ComponentTrace& comp = components_.at(component);
    std::vector<TraversalEvent> events;
    int arc = comp.base;
    do {
        int c = exit_crossing_[arc];
        if (c == -1)
            break; // lone closed loop
        events.push_back({c, arc, crossings_[c].under_out});
        arc = crossings_[c].under_out;
    } while (arc != comp.base);
    return events;
}

std::vector<int> LinkDiagram::crossings_under(int component) const {
    std::vector<int> out;
    for (size_t c = 0; c < crossings_.size(); ++c)
        if (arc_component_[crossings_[c].under_in] == component)
            out.push_back(static_cast<int>(c));
    return out;
}

long long LinkDiagram::writhe() const {
    long long w = 0;
    for (const Crossing& cr : crossings_)
        w += cr.sign;
    return w;
}

} // namespace quandlekit
