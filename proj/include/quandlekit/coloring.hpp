#pragma once

#include <compare>
#include <vector>

#include "quandlekit/diagram.hpp"
#include "quandlekit/extensions.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

// An assignment of a quandle element to every arc.  At a positive crossing
// C(under_out) = C(under_in) * C(over); at a negative one the under strand
// relation runs the other way, C(under_in) = C(under_out) * C(over).
struct Coloring {
    std::vector<int> colors;
    auto operator<=>(const Coloring&) const = default;
};

bool is_coloring(const LinkDiagram& d, const FiniteQuandle& q, const Coloring& c);

// All colorings, sorted by color vector.  Backtracks over arcs in component
// trace order, propagating crossing relations in both directions.
std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const FiniteQuandle& q);
long long count_colorings(const LinkDiagram& d, const FiniteQuandle& q);

// Signed cocycle sum over the undercrossings of one component: the total
// fiber shift a strand picks up when dragged once around the component in an
// extension with this cocycle.  The coloring must be valid.
int holonomy(const LinkDiagram& d, const FiniteQuandle& q, const Cochain2& phi, const Coloring& c,
             int component);
std::vector<int> holonomies(const LinkDiagram& d, const FiniteQuandle& q, const Cochain2& phi,
                            const Coloring& c);

// Attempt to lift a base coloring through an abelian extension by walking
// each component from its base arc, starting in the chosen fiber (0 when
// fiber_choices is empty).  The lift closes up iff every component holonomy
// vanishes; holonomies are reported either way.
struct LiftOutcome {
    bool ok;
    Coloring lifted;                 // extension colors, empty when !ok
    std::vector<int> component_holonomy;
};

LiftOutcome lift_coloring(const LinkDiagram& d, const AbelianExtension& ext, const Coloring& c,
                          const std::vector<int>& fiber_choices = {});

} // namespace quandlekit
