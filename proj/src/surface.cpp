#include "heegaard/surface.hpp"

#include <cassert>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace heegaard {

EdgePerm flow_edge(int eps_here, int quadrant) {
    static constexpr EdgePerm positive[4] = {EdgePerm::Alpha, EdgePerm::Beta, EdgePerm::AlphaInv,
                                             EdgePerm::BetaInv};
    static constexpr EdgePerm negative[4] = {EdgePerm::Beta, EdgePerm::AlphaInv, EdgePerm::BetaInv,
                                             EdgePerm::Alpha};
    return (eps_here > 0 ? positive : negative)[quadrant - 1];
}

int flow_quadrant(int quadrant, int eps_here, int eps_next) {
    const int delta = (eps_here > 0 ? 0 : 1) + (eps_next > 0 ? 1 : 2);
    return (quadrant - 1 + delta) % 4 + 1;
}

void corner_flow_self_check(const std::array<FlowRule, 16>& table) {
    for (std::size_t r = 0; r < table.size(); ++r) {
        const FlowRule& rule = table[r];
        if (flow_edge(rule.eps_here, rule.quadrant) != rule.edge)
            throw std::logic_error("corner-flow rule " + std::to_string(r) +
                                   ": edge disagrees with closed form");
        if (flow_quadrant(rule.quadrant, rule.eps_here, rule.eps_next) != rule.next_quadrant)
            throw std::logic_error("corner-flow rule " + std::to_string(r) +
                                   ": next quadrant disagrees with closed form");
    }
    // Every (eps, Q, eps') combination must appear exactly once.
    for (int eps : {+1, -1}) {
        for (int q = 1; q <= 4; ++q) {
            for (int eps_next : {+1, -1}) {
                int hits = 0;
                for (const FlowRule& rule : table) {
                    if (rule.eps_here == eps && rule.quadrant == q && rule.eps_next == eps_next)
                        ++hits;
                }
                if (hits != 1)
                    throw std::logic_error("corner-flow table does not cover (" +
                                           std::to_string(eps) + ", " + std::to_string(q) + ", " +
                                           std::to_string(eps_next) + ") exactly once");
            }
        }
    }
}

namespace {

std::once_flag self_check_flag;

void ensure_rules_checked() {
    std::call_once(self_check_flag, [] { corner_flow_self_check(); });
}

int apply_edge(const PermutationDataSet& ds, EdgePerm edge, int i) {
    switch (edge) {
        case EdgePerm::Alpha: return ds.alpha.apply(i);
        case EdgePerm::AlphaInv: return ds.alpha.apply_inverse(i);
        case EdgePerm::Beta: return ds.beta.apply(i);
        case EdgePerm::BetaInv: return ds.beta.apply_inverse(i);
    }
    return 0;
}

} // namespace

Corner phi(const PermutationDataSet& ds, Corner c) {
    ensure_rules_checked();
    assert(c.point >= 1 && c.point <= ds.degree() && c.quadrant >= 1 && c.quadrant <= 4);
    const int eps_here = ds.epsilon.at(c.point);
    const int next_point = apply_edge(ds, flow_edge(eps_here, c.quadrant), c.point);
    const int next_quadrant = flow_quadrant(c.quadrant, eps_here, ds.epsilon.at(next_point));
    return {next_point, next_quadrant};
}

OrbitPartition orbit_partition(const PermutationDataSet& ds) {
    ensure_rules_checked();
    const int d = ds.degree();
    OrbitPartition out;
    out.corner_to_orbit.assign(static_cast<std::size_t>(4 * d), -1);
    for (int point = 1; point <= d; ++point) {
        for (int quadrant = 1; quadrant <= 4; ++quadrant) {
            const Corner start{point, quadrant};
            if (out.corner_to_orbit[static_cast<std::size_t>(corner_slot(start))] != -1) continue;
            const int id = static_cast<int>(out.orbits.size());
            std::vector<Corner> orbit;
            Corner c = start;
            do {
                out.corner_to_orbit[static_cast<std::size_t>(corner_slot(c))] = id;
                orbit.push_back(c);
                c = phi(ds, c);
            } while (c != start);
            out.orbits.push_back(std::move(orbit));
        }
    }
    return out;
}

SurfaceSummary surface_summary(const PermutationDataSet& ds) {
    return surface_summary(ds, orbit_partition(ds));
}

SurfaceSummary surface_summary(const PermutationDataSet& ds, const OrbitPartition& orbits) {
    if (!is_transitive(ds))
        throw ValidationError(
            "surface summary requires a transitive data set; split connected sums first");
    SurfaceSummary s;
    s.d = ds.degree();
    s.boundary_count = orbits.orbit_count();
    s.euler = s.boundary_count - s.d;
    if ((s.d - s.boundary_count) % 2 != 0)
        throw std::logic_error("boundary count parity violated: b = " +
                               std::to_string(s.boundary_count) + ", d = " + std::to_string(s.d));
    s.genus = (s.d - s.boundary_count + 2) / 2;
    if (s.genus < 0)
        throw std::logic_error("negative genus from b = " + std::to_string(s.boundary_count) +
                               ", d = " + std::to_string(s.d));
    return s;
}

std::string ribbon_graph_dot(const PermutationDataSet& ds) {
    std::ostringstream out;
    out << "digraph ribbon {\n";
    out << "  node [shape=circle];\n";
    for (int i = 1; i <= ds.degree(); ++i)
        out << "  " << i << " [label=\"" << i << " (" << (ds.epsilon.at(i) > 0 ? "+1" : "-1")
            << ")\"];\n";
    for (int i = 1; i <= ds.degree(); ++i)
        out << "  " << i << " -> " << ds.alpha.apply(i) << " [label=\"X\"];\n";
    for (int i = 1; i <= ds.degree(); ++i)
        out << "  " << i << " -> " << ds.beta.apply(i) << " [label=\"Y\",style=dashed];\n";
    out << "}\n";
    return out.str();
}

} // namespace heegaard
