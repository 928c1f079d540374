#pragma once

#include <vector>

#include "heegaard/surface.hpp"

namespace heegaard {

// Which curve family is compressed. Re-inserting the other family merges
// quadrants at every crossing:
//   X side (Y-curves filled back in): (i,1) ~ (i,2) and (i,3) ~ (i,4)
//   Y side (X-curves filled back in): (i,1) ~ (i,4) and (i,2) ~ (i,3)
enum class Side { X, Y };

// One component of S - X (or S - Y): a class of boundary polygons glued
// along the re-inserted curve family, then capped along the compressed one.
//
// euler = n - m + t where n counts polygons in the class, m the matched
// edge gluings attributed to it, and t the tags (two per compressed curve,
// one on each side of the curve, placed at the curve's smallest crossing).
// Each side has exactly d matched edges in total, one per crossing,
// attributed to the class containing the corner (i,1); the quadrant merges
// guarantee both glued polygons already share that class.
struct ComponentClass {
    std::vector<int> orbit_ids; // 0-based ids into the OrbitPartition, ascending
    int polygon_count = 0;      // n
    int matched_edges = 0;      // m
    int tag_count = 0;          // t
    int euler = 0;              // n - m + t
    int genus = 0;              // 1 - euler / 2
    bool planar = false;        // genus == 0

    bool operator==(const ComponentClass&) const = default;
};

// Classes are ordered by their smallest orbit id.
std::vector<ComponentClass> side_components(const PermutationDataSet& ds,
                                            const OrbitPartition& orbits, Side side);

struct SideSummary {
    Side side = Side::X;
    int component_count = 0; // beta_0(S - side)
    int curve_count = 0;     // c(alpha) or c(beta)
    int boundary_genus = 0;  // genus of the boundary this side contributes
    bool empty_boundary = false;
    std::vector<ComponentClass> components;

    bool operator==(const SideSummary&) const = default;
};

// Aggregates the classes and cross-checks the two computations of the
// boundary genus: the component-genus sum must equal
// component_count - curve_count + g(S) - 1 exactly. A mismatch (or a
// violated sum invariant: total n = b, total m = d, total t = 2 * curves)
// throws std::logic_error -- it can only mean an internal bug.
SideSummary side_summary(const PermutationDataSet& ds, const OrbitPartition& orbits,
                         const SurfaceSummary& surface, Side side);

struct AnalysisReport {
    SurfaceSummary surface;
    SideSummary x_side;
    SideSummary y_side;
    bool closed = false;         // both sides have empty boundary
    bool presents_group = false; // c(alpha) == g(S)

    bool operator==(const AnalysisReport&) const = default;
};

// Full analysis of a transitive data set (throws ValidationError on a
// non-transitive one; use split_connected_sum / analyze_one instead).
AnalysisReport analyze(const PermutationDataSet& ds);

} // namespace heegaard
