#pragma once

// Shared fixtures, random generators and independent oracles for the test
// suites. The oracles intentionally avoid the production code paths they
// check: table_phi walks the literal rule table instead of the closed form,
// naive_orbits uses set-based bookkeeping, and brute_force_class builds
// members from per-generator label permutations instead of the enumerator's
// digit cursor.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "heegaard/decode.hpp"
#include "heegaard/encode.hpp"
#include "heegaard/json_io.hpp"
#include "heegaard/permdata.hpp"
#include "heegaard/presentation.hpp"
#include "heegaard/surface.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline heegaard::PermutationDataSet torus_data() {
    return heegaard::make_data_set({{1}}, {{1}}, {1});
}

inline heegaard::PermutationDataSet fig3_data() {
    return heegaard::make_data_set({{1, 2}, {3, 4, 5, 6}}, {{1, 6, 4}, {2, 3, 5}},
                                   {1, 1, -1, -1, -1, -1});
}

inline heegaard::PermutationDataSet section4_data() {
    return heegaard::make_data_set({{1, 2, 3, 4}, {5, 6, 7}, {8, 9, 10, 11}},
                                   {{1, 6}, {2, 4, 11}, {8, 5, 10}, {9, 3, 7}},
                                   {1, 1, -1, -1, -1, 1, -1, -1, 1, 1, 1});
}

inline heegaard::Presentation h3_presentation() {
    return heegaard::parse_presentation(
        "< x, y, z | x y x^-1 y^-1 z^-1, x z x^-1 z^-1, y z y^-1 z^-1 >");
}

// decode(fig3_data()) up to naming: both relators read x y^-1 y^-1.
inline heegaard::Presentation fig3_presentation() {
    return heegaard::parse_presentation("< x, y | x y^-1 y^-1, x y^-1 y^-1 >");
}

// (beta, alpha, -epsilon): the same diagram with the roles of the two curve
// families exchanged. Exchanging the families mirrors every crossing, which
// flips its sign.
inline heegaard::PermutationDataSet swap_sides(const heegaard::PermutationDataSet& ds) {
    std::vector<int> signs;
    for (int i = 1; i <= ds.degree(); ++i) signs.push_back(-ds.epsilon.at(i));
    heegaard::PermutationDataSet out;
    out.alpha = ds.beta;
    out.beta = ds.alpha;
    out.epsilon = heegaard::IntersectionFunction::from_signs(signs);
    return out;
}

// --- independent oracle: rule-table phi -----------------------------------

inline heegaard::Corner table_phi(const heegaard::PermutationDataSet& ds, heegaard::Corner c) {
    using heegaard::EdgePerm;
    const int eps_here = ds.epsilon.at(c.point);
    int next_point = 0;
    for (const auto& rule : heegaard::corner_flow_table) {
        if (rule.eps_here != eps_here || rule.quadrant != c.quadrant) continue;
        switch (rule.edge) {
            case EdgePerm::Alpha: next_point = ds.alpha.apply(c.point); break;
            case EdgePerm::AlphaInv: next_point = ds.alpha.apply_inverse(c.point); break;
            case EdgePerm::Beta: next_point = ds.beta.apply(c.point); break;
            case EdgePerm::BetaInv: next_point = ds.beta.apply_inverse(c.point); break;
        }
        break;
    }
    const int eps_next = ds.epsilon.at(next_point);
    for (const auto& rule : heegaard::corner_flow_table) {
        if (rule.eps_here == eps_here && rule.quadrant == c.quadrant && rule.eps_next == eps_next)
            return {next_point, rule.next_quadrant};
    }
    return {0, 0};
}

inline std::vector<std::vector<heegaard::Corner>> naive_orbits(
    const heegaard::PermutationDataSet& ds) {
    std::set<heegaard::Corner> pending;
    for (int i = 1; i <= ds.degree(); ++i)
        for (int q = 1; q <= 4; ++q) pending.insert({i, q});
    std::vector<std::vector<heegaard::Corner>> orbits;
    while (!pending.empty()) {
        const heegaard::Corner start = *pending.begin();
        std::vector<heegaard::Corner> orbit;
        heegaard::Corner c = start;
        do {
            pending.erase(c);
            orbit.push_back(c);
            c = table_phi(ds, c);
        } while (c != start);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

// --- independent oracle: brute-force class listing ------------------------

// Every member of the full class, built by combining one permutation of each
// generator's block labels (occurrence t of generator g takes the t-th entry
// of g's permuted label list). Returned as canonical JSON strings so
// duplicates collapse.
inline std::set<std::string> brute_force_class(const heegaard::Presentation& p) {
    const std::vector<int> counts = p.occurrence_counts();
    const int m = p.generator_count;
    std::vector<std::vector<int>> block(static_cast<std::size_t>(m));
    int next = 1;
    for (int g = 0; g < m; ++g)
        for (int k = 0; k < counts[static_cast<std::size_t>(g)]; ++k)
            block[static_cast<std::size_t>(g)].push_back(next++);
    const int d = next - 1;

    std::set<std::string> members;
    std::vector<std::vector<int>> assignment = block;
    const std::function<void(int)> recurse = [&](int g) {
        if (g == m) {
            std::vector<int> cursor(static_cast<std::size_t>(m), 0);
            std::vector<std::vector<int>> beta(p.relators.size());
            std::vector<int> signs(static_cast<std::size_t>(d), 0);
            for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
                for (const heegaard::Letter& l : p.relators[ri].letters) {
                    const int label =
                        assignment[static_cast<std::size_t>(l.gen - 1)]
                                  [static_cast<std::size_t>(cursor[static_cast<std::size_t>(l.gen - 1)]++)];
                    beta[ri].push_back(label);
                    signs[static_cast<std::size_t>(label - 1)] = l.sign;
                }
            }
            const auto ds = heegaard::make_data_set(d, block, beta, signs, false);
            members.insert(nlohmann::json(ds).dump());
            return;
        }
        std::vector<int> perm = block[static_cast<std::size_t>(g)];
        do {
            assignment[static_cast<std::size_t>(g)] = perm;
            recurse(g + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    recurse(0);
    return members;
}

// --- random generators -----------------------------------------------------

inline heegaard::CyclePermutation random_permutation(Rng& rng, int d) {
    std::vector<int> image(static_cast<std::size_t>(d) + 1, 0);
    std::vector<int> values(static_cast<std::size_t>(d));
    std::iota(values.begin(), values.end(), 1);
    std::shuffle(values.begin(), values.end(), rng);
    for (int i = 1; i <= d; ++i) image[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(i - 1)];
    return heegaard::CyclePermutation::from_image(d, image);
}

inline heegaard::PermutationDataSet random_data_set(Rng& rng, int max_degree) {
    const int d = std::uniform_int_distribution<int>(1, max_degree)(rng);
    heegaard::PermutationDataSet ds;
    ds.alpha = random_permutation(rng, d);
    ds.beta = random_permutation(rng, d);
    std::vector<int> signs(static_cast<std::size_t>(d));
    for (auto& s : signs) s = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    ds.epsilon = heegaard::IntersectionFunction::from_signs(signs);
    return ds;
}

inline heegaard::PermutationDataSet random_transitive_data_set(Rng& rng, int max_degree) {
    for (;;) {
        auto ds = random_data_set(rng, max_degree);
        if (heegaard::is_transitive(ds)) return ds;
    }
}

inline std::vector<int> random_sigma(Rng& rng, int d) {
    std::vector<int> sigma(static_cast<std::size_t>(d));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    return sigma;
}

// Trivially reduced, every generator used, no empty relator.
inline heegaard::Presentation random_reduced_presentation(Rng& rng, int max_generators = 3,
                                                          int max_relators = 3,
                                                          int max_relator_length = 4) {
    for (;;) {
        heegaard::Presentation p;
        p.generator_count = std::uniform_int_distribution<int>(1, max_generators)(rng);
        const int n = std::uniform_int_distribution<int>(1, max_relators)(rng);
        for (int r = 0; r < n; ++r) {
            heegaard::Relator rel;
            const int len = std::uniform_int_distribution<int>(1, max_relator_length)(rng);
            for (int t = 0; t < len; ++t) {
                rel.letters.push_back(
                    {std::uniform_int_distribution<int>(1, p.generator_count)(rng),
                     std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1});
            }
            p.relators.push_back(std::move(rel));
        }
        p = heegaard::trivially_reduce(p);
        if (!heegaard::validate_for_encoding(p).empty()) continue;
        return p;
    }
}

// True when assignments and data sets are in bijection for p: no relator may
// be a proper power as a cyclic word and no two relators may be cyclically
// equal (either situation makes distinct label assignments collide into the
// same permutation data).
inline bool has_assignment_symmetry(const heegaard::Presentation& p) {
    for (const auto& r : p.relators) {
        const int k = r.length();
        for (int s = 1; s < k; ++s) {
            bool equal = true;
            for (int t = 0; t < k && equal; ++t)
                equal = r.letters[static_cast<std::size_t>(t)] ==
                        r.letters[static_cast<std::size_t>((t + s) % k)];
            if (equal) return true;
        }
    }
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (std::size_t j = i + 1; j < p.relators.size(); ++j)
            if (heegaard::cyclically_equal(p.relators[i], p.relators[j])) return true;
    return false;
}

} // namespace testsupport
