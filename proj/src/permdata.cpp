#include "heegaard/permdata.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace heegaard {

namespace {

void check_degree(int degree) {
    if (degree < 1)
        throw ValidationError("degree must be at least 1, got " + std::to_string(degree));
}

} // namespace

CyclePermutation CyclePermutation::from_cycles(int degree,
                                               const std::vector<std::vector<int>>& cycles,
                                               bool implicit_fixed_points) {
    check_degree(degree);
    std::vector<char> seen(static_cast<std::size_t>(degree) + 1, 0);
    std::vector<int> image(static_cast<std::size_t>(degree) + 1, 0);
    for (const auto& cycle : cycles) {
        if (cycle.empty()) throw ValidationError("empty cycle");
        for (int e : cycle) {
            if (e < 1 || e > degree)
                throw ValidationError("element " + std::to_string(e) + " out of range [1, " +
                                      std::to_string(degree) + "]");
            if (seen[static_cast<std::size_t>(e)])
                throw ValidationError("repeated element " + std::to_string(e) + " in cycle data");
            seen[static_cast<std::size_t>(e)] = 1;
        }
        for (std::size_t t = 0; t < cycle.size(); ++t)
            image[static_cast<std::size_t>(cycle[t])] = cycle[(t + 1) % cycle.size()];
    }
    for (int i = 1; i <= degree; ++i) {
        if (!seen[static_cast<std::size_t>(i)]) {
            if (!implicit_fixed_points)
                throw ValidationError("element " + std::to_string(i) + " missing from cycle data");
            image[static_cast<std::size_t>(i)] = i;
        }
    }
    return from_image(degree, image);
}

CyclePermutation CyclePermutation::from_image(int degree, const std::vector<int>& image) {
    check_degree(degree);
    if (image.size() != static_cast<std::size_t>(degree) + 1)
        throw ValidationError("image table has wrong size");
    std::vector<char> hit(static_cast<std::size_t>(degree) + 1, 0);
    for (int i = 1; i <= degree; ++i) {
        const int v = image[static_cast<std::size_t>(i)];
        if (v < 1 || v > degree)
            throw ValidationError("image value " + std::to_string(v) + " out of range");
        if (hit[static_cast<std::size_t>(v)])
            throw ValidationError("image is not a bijection (value " + std::to_string(v) + " repeated)");
        hit[static_cast<std::size_t>(v)] = 1;
    }

    CyclePermutation p;
    p.degree = degree;
    p.image = image;
    p.image[0] = 0;
    p.preimage.assign(static_cast<std::size_t>(degree) + 1, 0);
    for (int i = 1; i <= degree; ++i)
        p.preimage[static_cast<std::size_t>(p.image[static_cast<std::size_t>(i)])] = i;

    // Sweeping from the smallest unvisited point yields the normal form
    // directly: each cycle starts at its minimum and cycles come out sorted.
    p.cycle_index.assign(static_cast<std::size_t>(degree) + 1, 0);
    std::vector<char> visited(static_cast<std::size_t>(degree) + 1, 0);
    for (int start = 1; start <= degree; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        int cur = start;
        do {
            visited[static_cast<std::size_t>(cur)] = 1;
            cycle.push_back(cur);
            cur = p.image[static_cast<std::size_t>(cur)];
        } while (cur != start);
        p.cycles.push_back(std::move(cycle));
        const int id = static_cast<int>(p.cycles.size());
        for (int e : p.cycles.back()) p.cycle_index[static_cast<std::size_t>(e)] = id;
    }
    return p;
}

IntersectionFunction IntersectionFunction::from_signs(const std::vector<int>& signs) {
    IntersectionFunction f;
    f.values.assign(signs.size() + 1, 0);
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] != 1 && signs[i] != -1)
            throw ValidationError("sign values must be +1 or -1, got " + std::to_string(signs[i]) +
                                  " at position " + std::to_string(i + 1));
        f.values[i + 1] = signs[i];
    }
    return f;
}

PermutationDataSet make_data_set(int degree,
                                 const std::vector<std::vector<int>>& alpha_cycles,
                                 const std::vector<std::vector<int>>& beta_cycles,
                                 const std::vector<int>& signs,
                                 bool implicit_fixed_points) {
    check_degree(degree);
    if (signs.size() != static_cast<std::size_t>(degree))
        throw ValidationError("sign list length " + std::to_string(signs.size()) +
                              " does not match degree " + std::to_string(degree));
    PermutationDataSet ds;
    try {
        ds.alpha = CyclePermutation::from_cycles(degree, alpha_cycles, implicit_fixed_points);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("alpha: ") + e.what());
    }
    try {
        ds.beta = CyclePermutation::from_cycles(degree, beta_cycles, implicit_fixed_points);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("beta: ") + e.what());
    }
    ds.epsilon = IntersectionFunction::from_signs(signs);
    return ds;
}

PermutationDataSet make_data_set(const std::vector<std::vector<int>>& alpha_cycles,
                                 const std::vector<std::vector<int>>& beta_cycles,
                                 const std::vector<int>& signs) {
    return make_data_set(static_cast<int>(signs.size()), alpha_cycles, beta_cycles, signs);
}

PermutationDataSet relabel(const PermutationDataSet& ds, const std::vector<int>& sigma) {
    const int d = ds.degree();
    if (sigma.size() != static_cast<std::size_t>(d))
        throw ValidationError("sigma has wrong length");
    std::vector<char> hit(static_cast<std::size_t>(d) + 1, 0);
    for (int v : sigma) {
        if (v < 1 || v > d) throw ValidationError("sigma value out of range");
        if (hit[static_cast<std::size_t>(v)]) throw ValidationError("sigma is not a bijection");
        hit[static_cast<std::size_t>(v)] = 1;
    }
    const auto s = [&](int i) { return sigma[static_cast<std::size_t>(i - 1)]; };

    std::vector<int> a_img(static_cast<std::size_t>(d) + 1, 0);
    std::vector<int> b_img(static_cast<std::size_t>(d) + 1, 0);
    std::vector<int> eps(static_cast<std::size_t>(d), 0);
    for (int i = 1; i <= d; ++i) {
        a_img[static_cast<std::size_t>(s(i))] = s(ds.alpha.apply(i));
        b_img[static_cast<std::size_t>(s(i))] = s(ds.beta.apply(i));
        eps[static_cast<std::size_t>(s(i) - 1)] = ds.epsilon.at(i);
    }
    PermutationDataSet out;
    out.alpha = CyclePermutation::from_image(d, a_img);
    out.beta = CyclePermutation::from_image(d, b_img);
    out.epsilon = IntersectionFunction::from_signs(eps);
    return out;
}

bool is_transitive(const PermutationDataSet& ds) {
    const int d = ds.degree();
    std::vector<char> visited(static_cast<std::size_t>(d) + 1, 0);
    std::vector<int> stack{1};
    visited[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int next : {ds.alpha.apply(i), ds.alpha.apply_inverse(i), ds.beta.apply(i),
                         ds.beta.apply_inverse(i)}) {
            if (!visited[static_cast<std::size_t>(next)]) {
                visited[static_cast<std::size_t>(next)] = 1;
                ++reached;
                stack.push_back(next);
            }
        }
    }
    return reached == d;
}

std::vector<PermutationDataSet> split_connected_sum(const PermutationDataSet& ds) {
    const int d = ds.degree();

    // Orbit labelling via a sweep; orbits come out ordered by smallest point.
    std::vector<int> orbit(static_cast<std::size_t>(d) + 1, 0);
    int orbit_count = 0;
    for (int start = 1; start <= d; ++start) {
        if (orbit[static_cast<std::size_t>(start)] != 0) continue;
        ++orbit_count;
        std::vector<int> stack{start};
        orbit[static_cast<std::size_t>(start)] = orbit_count;
        while (!stack.empty()) {
            const int i = stack.back();
            stack.pop_back();
            for (int next : {ds.alpha.apply(i), ds.alpha.apply_inverse(i), ds.beta.apply(i),
                             ds.beta.apply_inverse(i)}) {
                if (orbit[static_cast<std::size_t>(next)] == 0) {
                    orbit[static_cast<std::size_t>(next)] = orbit_count;
                    stack.push_back(next);
                }
            }
        }
    }
    if (orbit_count == 1) return {ds};

    // Order-preserving renumbering within each orbit: smallest old label
    // becomes 1, and so on.
    std::vector<int> new_label(static_cast<std::size_t>(d) + 1, 0);
    std::vector<int> orbit_size(static_cast<std::size_t>(orbit_count) + 1, 0);
    for (int i = 1; i <= d; ++i)
        new_label[static_cast<std::size_t>(i)] = ++orbit_size[static_cast<std::size_t>(orbit[static_cast<std::size_t>(i)])];

    std::vector<PermutationDataSet> out;
    for (int o = 1; o <= orbit_count; ++o) {
        const int size = orbit_size[static_cast<std::size_t>(o)];
        std::vector<std::vector<int>> a_cycles, b_cycles;
        for (const auto& cycle : ds.alpha.cycles) {
            if (orbit[static_cast<std::size_t>(cycle.front())] != o) continue;
            std::vector<int> mapped;
            mapped.reserve(cycle.size());
            for (int e : cycle) mapped.push_back(new_label[static_cast<std::size_t>(e)]);
            a_cycles.push_back(std::move(mapped));
        }
        for (const auto& cycle : ds.beta.cycles) {
            if (orbit[static_cast<std::size_t>(cycle.front())] != o) continue;
            std::vector<int> mapped;
            mapped.reserve(cycle.size());
            for (int e : cycle) mapped.push_back(new_label[static_cast<std::size_t>(e)]);
            b_cycles.push_back(std::move(mapped));
        }
        std::vector<int> signs(static_cast<std::size_t>(size), 0);
        for (int i = 1; i <= d; ++i) {
            if (orbit[static_cast<std::size_t>(i)] == o)
                signs[static_cast<std::size_t>(new_label[static_cast<std::size_t>(i)] - 1)] = ds.epsilon.at(i);
        }
        out.push_back(make_data_set(size, a_cycles, b_cycles, signs, false));
    }
    return out;
}

} // namespace heegaard
