#include "quandlekit/coloring.hpp"

#include <algorithm>

namespace quandlekit {

bool is_coloring(const LinkDiagram& d, const FiniteQuandle& q, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != d.arc_count())
        return false;
    for (int v : c.colors)
        if (v < 0 || v >= q.size())
            return false;
    for (const Crossing& cr : d.crossings()) {
        int in = c.colors[cr.under_in], out = c.colors[cr.under_out], over = c.colors[cr.over];
        int want = cr.sign > 0 ? q.op(in, over) : q.solve_right(in, over);
        if (out != want)
            return false;
    }
    return true;
}

namespace {

struct ColoringSearch {
    const LinkDiagram& d;
    const FiniteQuandle& q;
    std::vector<int> color;
    std::vector<std::vector<int>> incident; // arc -> crossings touching it
    std::vector<int> order;                 // arcs in component trace order
    std::vector<Coloring> found;

    explicit ColoringSearch(const LinkDiagram& diagram, const FiniteQuandle& quandle)
        : d(diagram), q(quandle), color(diagram.arc_count(), -1),
          incident(diagram.arc_count()) {
        const auto& crossings = d.crossings();
        for (size_t c = 0; c < crossings.size(); ++c)
            for (int arc : {crossings[c].under_in, crossings[c].under_out, crossings[c].over})
                if (incident[arc].empty() || incident[arc].back() != static_cast<int>(c))
                    incident[arc].push_back(static_cast<int>(c));
        for (const ComponentTrace& comp : d.components())
            order.insert(order.end(), comp.arcs.begin(), comp.arcs.end());
    }

    bool set(int arc, int value, std::vector<int>& trail) {
        if (color[arc] != -1)
            return color[arc] == value;
        color[arc] = value;
        trail.push_back(arc);
        return true;
    }

    // Derive whatever a crossing determines from its colored arcs.  The over
    // strand never follows from the under strands, so nothing is derived
    // until it is colored; once it is, both directions fire and double as
    // consistency checks.
    bool apply(int c, std::vector<int>& trail) {
        const Crossing& cr = d.crossings()[c];
        int over = color[cr.over];
        if (over == -1)
            return true;
        int in = color[cr.under_in];
        if (in != -1 &&
            !set(cr.under_out, cr.sign > 0 ? q.op(in, over) : q.solve_right(in, over), trail))
            return false;
        int out = color[cr.under_out];
        if (out != -1 &&
            !set(cr.under_in, cr.sign > 0 ? q.solve_right(out, over) : q.op(out, over), trail))
            return false;
        return true;
    }

    bool propagate(std::vector<int>& trail) {
        for (size_t i = 0; i < trail.size(); ++i)
            for (int c : incident[trail[i]])
                if (!apply(c, trail))
                    return false;
        return true;
    }

    void dfs(size_t pos) {
        while (pos < order.size() && color[order[pos]] != -1)
            ++pos;
        if (pos == order.size()) {
            found.push_back(Coloring{color});
            return;
        }
        int arc = order[pos];
        for (int v = 0; v < q.size(); ++v) {
            std::vector<int> trail;
            if (set(arc, v, trail) && propagate(trail))
                dfs(pos + 1);
            for (int a : trail)
                color[a] = -1;
        }
    }
};

} // namespace

std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const FiniteQuandle& q) {
    ColoringSearch search(d, q);
    search.dfs(0);
    std::sort(search.found.begin(), search.found.end());
    return search.found;
}

long long count_colorings(const LinkDiagram& d, const FiniteQuandle& q) {
    ColoringSearch search(d, q);
    search.dfs(0);
    return static_cast<long long>(search.found.size());
}

int holonomy(const LinkDiagram& d, const FiniteQuandle& q, const Cochain2& phi, const Coloring& c,
             int component) {
    if (!is_coloring(d, q, c))
        throw ValidationFailure("holonomy of something that is not a coloring");
    if (phi.size() != q.size())
        throw MalformedInput("cochain size does not match quandle size");
    const AbelianGroup& g = phi.group();
    int total = 0;
    for (int ci : d.crossings_under(component)) {
        const Crossing& cr = d.crossings()[ci];
        int x = cr.sign > 0 ? c.colors[cr.under_in] : c.colors[cr.under_out];
        total = g.add(total, g.scale(cr.sign, phi(x, c.colors[cr.over])));
    }
    return total;
}

std::vector<int> holonomies(const LinkDiagram& d, const FiniteQuandle& q, const Cochain2& phi,
                            const Coloring& c) {
    std::vector<int> out(d.component_count());
    for (int i = 0; i < d.component_count(); ++i)
        out[i] = holonomy(d, q, phi, c, i);
    return out;
}

LiftOutcome lift_coloring(const LinkDiagram& d, const AbelianExtension& ext, const Coloring& c,
                          const std::vector<int>& fiber_choices) {
    const FiniteQuandle& x = ext.base;
    if (!is_coloring(d, x, c))
        throw ValidationFailure("cannot lift something that is not a coloring of the base");
    std::vector<int> start(d.component_count(), 0);
    if (!fiber_choices.empty()) {
        if (static_cast<int>(fiber_choices.size()) != d.component_count())
            throw MalformedInput("need one fiber choice per component");
        for (int a : fiber_choices)
            if (a < 0 || a >= ext.fiber.order())
                throw MalformedInput("fiber choice outside the fiber group");
        start = fiber_choices;
    }

    const AbelianGroup& g = ext.fiber;
    std::vector<int> fiber(d.arc_count(), 0);
    LiftOutcome outcome;
    outcome.component_holonomy.resize(d.component_count());
    outcome.ok = true;
    for (int i = 0; i < d.component_count(); ++i) {
        int a = start[i];
        fiber[d.components()[i].base] = a;
        for (const TraversalEvent& ev : d.traverse(i)) {
            const Crossing& cr = d.crossings()[ev.crossing];
            // In the extension, passing under shifts the fiber by the signed
            // cocycle value at (incoming under color, over color), reading
            // the incoming color on the positive side of the crossing.
            int xr = cr.sign > 0 ? c.colors[cr.under_in] : c.colors[cr.under_out];
            a = g.add(a, g.scale(cr.sign, ext.cocycle(xr, c.colors[cr.over])));
            fiber[ev.to_arc] = a;
        }
        int drift = g.subtract(a, start[i]);
        outcome.component_holonomy[i] = drift;
        if (drift != 0)
            outcome.ok = false;
    }
    if (outcome.ok) {
        outcome.lifted.colors.resize(d.arc_count());
        for (int arc = 0; arc < d.arc_count(); ++arc)
            outcome.lifted.colors[arc] = ext.pair_index(fiber[arc], c.colors[arc]);
    }
    return outcome;
}

} // namespace quandlekit
