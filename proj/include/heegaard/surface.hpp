#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "heegaard/permdata.hpp"

namespace heegaard {

// One of the four quadrants at crossing `point`. A data set of degree d has
// exactly 4d corners, permuted by the boundary-tracing map phi.
struct Corner {
    int point = 0;
    int quadrant = 0;
    auto operator<=>(const Corner&) const = default;
};

inline int corner_slot(Corner c) { return (c.point - 1) * 4 + (c.quadrant - 1); }

enum class EdgePerm { Alpha, Beta, AlphaInv, BetaInv };

// One row of the corner-flow rule set: starting at a corner of a crossing
// with sign eps_here in quadrant `quadrant`, the boundary flows along the
// given edge to the next crossing, entering next_quadrant when that crossing
// has sign eps_next.
struct FlowRule {
    int eps_here;
    int quadrant;
    EdgePerm edge;
    int eps_next;
    int next_quadrant;
};

// The 16 rules, kept as literal data. phi() uses the equivalent closed form
//   eps = +1: edge by quadrant = alpha, beta, alpha^-1, beta^-1
//             Q' = Q+1 when eps' = +1, else Q+2   (mod 4, range 1..4)
//   eps = -1: edge by quadrant = beta, alpha^-1, beta^-1, alpha
//             Q' = Q+2 when eps' = +1, else Q+3
// and the two representations are checked against each other once at
// startup; a mismatch aborts.
inline constexpr std::array<FlowRule, 16> corner_flow_table{{
    {+1, 1, EdgePerm::Alpha, +1, 2},
    {+1, 1, EdgePerm::Alpha, -1, 3},
    {+1, 2, EdgePerm::Beta, +1, 3},
    {+1, 2, EdgePerm::Beta, -1, 4},
    {+1, 3, EdgePerm::AlphaInv, +1, 4},
    {+1, 3, EdgePerm::AlphaInv, -1, 1},
    {+1, 4, EdgePerm::BetaInv, +1, 1},
    {+1, 4, EdgePerm::BetaInv, -1, 2},
    {-1, 1, EdgePerm::Beta, +1, 3},
    {-1, 1, EdgePerm::Beta, -1, 4},
    {-1, 2, EdgePerm::AlphaInv, +1, 4},
    {-1, 2, EdgePerm::AlphaInv, -1, 1},
    {-1, 3, EdgePerm::BetaInv, +1, 1},
    {-1, 3, EdgePerm::BetaInv, -1, 2},
    {-1, 4, EdgePerm::Alpha, +1, 2},
    {-1, 4, EdgePerm::Alpha, -1, 3},
}};

// Closed-form pieces of phi, exposed for the self-check and tests.
EdgePerm flow_edge(int eps_here, int quadrant);
int flow_quadrant(int quadrant, int eps_here, int eps_next);

// Verifies that the closed form reproduces every table row and that the
// table covers all 16 (eps, Q, eps') combinations exactly once. Throws
// std::logic_error on any mismatch. Runs automatically (once) before any
// phi-based computation; the CLI also runs it at startup.
void corner_flow_self_check(const std::array<FlowRule, 16>& table = corner_flow_table);

// The boundary-tracing permutation on the 4d corners.
Corner phi(const PermutationDataSet& ds, Corner c);

// The orbits of phi: one per boundary polygon of the ribbon diagram.
// Orbits are numbered by their smallest corner in (point, quadrant) order
// and listed starting from that corner, so reports are reproducible.
struct OrbitPartition {
    std::vector<std::vector<Corner>> orbits;
    std::vector<int> corner_to_orbit; // indexed by corner_slot, 0-based orbit ids

    int orbit_count() const { return static_cast<int>(orbits.size()); }
    int orbit_of(Corner c) const { return corner_to_orbit[static_cast<std::size_t>(corner_slot(c))]; }
};

OrbitPartition orbit_partition(const PermutationDataSet& ds);

// Capping the b boundary polygons of the ribbon diagram (which collapses to
// a graph with d vertices and 2d edges, so euler = b - d) yields the closed
// splitting surface of genus (d - b + 2) / 2.
struct SurfaceSummary {
    int d = 0;
    int boundary_count = 0; // b
    int euler = 0;          // b - d
    int genus = 0;          // (d - b + 2) / 2

    bool operator==(const SurfaceSummary&) const = default;
};

// Requires a transitive data set (throws ValidationError otherwise: split
// connected sums first). A parity violation b != d (mod 2) or a negative
// genus can only come from an internal bug and throws std::logic_error.
SurfaceSummary surface_summary(const PermutationDataSet& ds);
SurfaceSummary surface_summary(const PermutationDataSet& ds, const OrbitPartition& orbits);

// Graphviz view of the 4-valent ribbon graph: one vertex per crossing
// (labelled with its sign), directed X edges i -> alpha(i) and Y edges
// i -> beta(i). For inspection only.
std::string ribbon_graph_dot(const PermutationDataSet& ds);

} // namespace heegaard
