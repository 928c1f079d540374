#pragma once

#include <vector>

#include "heegaard/errors.hpp"

namespace heegaard {

// A permutation of {1..d} stored as disjoint cycles in normal form: every
// point appears (fixed points as explicit length-1 cycles), each cycle is
// rotated so its smallest element comes first, and cycles are sorted by
// first element. The normal form makes equality a plain field comparison
// without changing the permutation.
struct CyclePermutation {
    int degree = 0;
    std::vector<std::vector<int>> cycles;
    std::vector<int> image;       // 1-based; image[0] unused
    std::vector<int> preimage;    // 1-based
    std::vector<int> cycle_index; // 1-based cycle id per point

    // Builds from cycle data. With implicit_fixed_points, points of {1..d}
    // absent from the cycles become length-1 cycles; otherwise they are an
    // error. Throws ValidationError on empty cycles, out-of-range or
    // repeated elements.
    static CyclePermutation from_cycles(int degree,
                                        const std::vector<std::vector<int>>& cycles,
                                        bool implicit_fixed_points);

    // Builds from an image table (1-based, size degree + 1; slot 0 ignored).
    static CyclePermutation from_image(int degree, const std::vector<int>& image);

    int apply(int i) const { return image[static_cast<std::size_t>(i)]; }
    int apply_inverse(int i) const { return preimage[static_cast<std::size_t>(i)]; }
    int cycle_count() const { return static_cast<int>(cycles.size()); }

    // The a-map: 1-based index of the cycle containing point i.
    int cycle_of(int i) const { return cycle_index[static_cast<std::size_t>(i)]; }
    int cycle_length(int c) const { return static_cast<int>(cycles[static_cast<std::size_t>(c - 1)].size()); }

    bool operator==(const CyclePermutation&) const = default;
};

// The sign of each crossing, +1 or -1, as a total function on {1..d}.
struct IntersectionFunction {
    std::vector<int> values; // 1-based; values[0] unused

    static IntersectionFunction from_signs(const std::vector<int>& signs);

    int degree() const { return static_cast<int>(values.size()) - 1; }
    int at(int i) const { return values[static_cast<std::size_t>(i)]; }

    bool operator==(const IntersectionFunction&) const = default;
};

// The machine form of a diagram: cycles of alpha are the X-curves, cycles
// of beta the Y-curves, epsilon the crossing signs at the d intersection
// points shared by both permutations.
struct PermutationDataSet {
    CyclePermutation alpha;
    CyclePermutation beta;
    IntersectionFunction epsilon;

    int degree() const { return alpha.degree; }

    bool operator==(const PermutationDataSet&) const = default;
};

// Validates and assembles a data set. signs is 0-based (signs[0] is the
// sign at point 1) and must have exactly `degree` entries.
PermutationDataSet make_data_set(int degree,
                                 const std::vector<std::vector<int>>& alpha_cycles,
                                 const std::vector<std::vector<int>>& beta_cycles,
                                 const std::vector<int>& signs,
                                 bool implicit_fixed_points = true);

// Degree taken from the sign list.
PermutationDataSet make_data_set(const std::vector<std::vector<int>>& alpha_cycles,
                                 const std::vector<std::vector<int>>& beta_cycles,
                                 const std::vector<int>& signs);

// Conjugates both permutations by sigma and transports the signs:
// (alpha, beta, eps) -> (s a s^-1, s b s^-1, eps o s^-1). sigma[i-1] is the
// new label of point i; it must be a bijection on {1..d}. Every analysis
// result is invariant under relabelling.
PermutationDataSet relabel(const PermutationDataSet& ds, const std::vector<int>& sigma);

// True iff alpha and beta generate a transitive subgroup of S_d, computed
// as connectivity of the graph with edges i - alpha(i) and i - beta(i).
bool is_transitive(const PermutationDataSet& ds);

// Splits a data set into its transitive constituents (the connected-sum
// summands of the manifold). Each constituent keeps its cycles and signs,
// renumbered order-preservingly to degree = orbit size. A transitive input
// comes back as a singleton list, unchanged.
std::vector<PermutationDataSet> split_connected_sum(const PermutationDataSet& ds);

} // namespace heegaard
