#include "heegaard/boundary.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace heegaard {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        int root = x;
        while (parent[static_cast<std::size_t>(root)] != root) root = parent[static_cast<std::size_t>(root)];
        while (parent[static_cast<std::size_t>(x)] != root) {
            const int next = parent[static_cast<std::size_t>(x)];
            parent[static_cast<std::size_t>(x)] = root;
            x = next;
        }
        return root;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(b)] = a;
    }
};

} // namespace

std::vector<ComponentClass> side_components(const PermutationDataSet& ds,
                                            const OrbitPartition& orbits, Side side) {
    const int d = ds.degree();
    const int b = orbits.orbit_count();
    const auto oid = [&](int point, int quadrant) { return orbits.orbit_of({point, quadrant}); };

    UnionFind uf(b);
    for (int i = 1; i <= d; ++i) {
        if (side == Side::X) {
            uf.unite(oid(i, 1), oid(i, 2));
            uf.unite(oid(i, 3), oid(i, 4));
        } else {
            uf.unite(oid(i, 1), oid(i, 4));
            uf.unite(oid(i, 2), oid(i, 3));
        }
    }

    // Classes in first-seen order while scanning orbit ids upward, i.e.
    // ordered by smallest member orbit.
    std::map<int, int> class_of_root;
    std::vector<ComponentClass> classes;
    for (int o = 0; o < b; ++o) {
        const int root = uf.find(o);
        auto [it, inserted] = class_of_root.try_emplace(root, static_cast<int>(classes.size()));
        if (inserted) classes.emplace_back();
        classes[static_cast<std::size_t>(it->second)].orbit_ids.push_back(o);
    }
    for (auto& cls : classes) cls.polygon_count = static_cast<int>(cls.orbit_ids.size());

    // One matched edge per crossing, landing in the class of corner (i,1).
    for (int i = 1; i <= d; ++i)
        ++classes[static_cast<std::size_t>(class_of_root.at(uf.find(oid(i, 1))))].matched_edges;

    // Two tags per compressed curve, at its smallest crossing. Quadrants
    // {1,3} (X side) and {2,4} (Y side) always fall on the two opposite
    // sides of the curve, whatever the crossing sign.
    const auto& curves = (side == Side::X) ? ds.alpha.cycles : ds.beta.cycles;
    const int tag_quadrants[2] = {side == Side::X ? 1 : 2, side == Side::X ? 3 : 4};
    for (const auto& cycle : curves) {
        const int min_point = cycle.front();
        for (int q : tag_quadrants)
            ++classes[static_cast<std::size_t>(class_of_root.at(uf.find(oid(min_point, q))))].tag_count;
    }

    for (auto& cls : classes) {
        cls.euler = cls.polygon_count - cls.matched_edges + cls.tag_count;
        if (cls.euler % 2 != 0 || cls.euler > 2)
            throw std::logic_error("component euler characteristic out of range: " +
                                   std::to_string(cls.euler));
        cls.genus = (2 - cls.euler) / 2;
        cls.planar = cls.genus == 0;
    }
    return classes;
}

SideSummary side_summary(const PermutationDataSet& ds, const OrbitPartition& orbits,
                         const SurfaceSummary& surface, Side side) {
    SideSummary s;
    s.side = side;
    s.components = side_components(ds, orbits, side);
    s.component_count = static_cast<int>(s.components.size());
    s.curve_count = (side == Side::X) ? ds.alpha.cycle_count() : ds.beta.cycle_count();

    int total_polygons = 0, total_edges = 0, total_tags = 0, genus_sum = 0;
    for (const auto& cls : s.components) {
        total_polygons += cls.polygon_count;
        total_edges += cls.matched_edges;
        total_tags += cls.tag_count;
        genus_sum += cls.genus;
    }
    if (total_polygons != surface.boundary_count || total_edges != surface.d ||
        total_tags != 2 * s.curve_count)
        throw std::logic_error("side aggregation sums violated");

    const int genus_formula = s.component_count - s.curve_count + surface.genus - 1;
    if (genus_sum != genus_formula)
        throw std::logic_error("boundary genus cross-check failed: component sum " +
                               std::to_string(genus_sum) + " vs formula " +
                               std::to_string(genus_formula));
    s.boundary_genus = genus_sum;
    s.empty_boundary = genus_sum == 0;
    return s;
}

AnalysisReport analyze(const PermutationDataSet& ds) {
    if (!is_transitive(ds))
        throw ValidationError(
            "data set is not transitive; split it with split_connected_sum and analyze each "
            "constituent");
    const OrbitPartition orbits = orbit_partition(ds);
    AnalysisReport report;
    report.surface = surface_summary(ds, orbits);
    report.x_side = side_summary(ds, orbits, report.surface, Side::X);
    report.y_side = side_summary(ds, orbits, report.surface, Side::Y);
    report.closed = report.x_side.empty_boundary && report.y_side.empty_boundary;
    report.presents_group = ds.alpha.cycle_count() == report.surface.genus;
    return report;
}

} // namespace heegaard
