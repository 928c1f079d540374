#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heegaard/permdata.hpp"
#include "heegaard/presentation.hpp"

namespace heegaard {

// Class sizes are products of factorials and overflow quickly; they are
// tracked in 128 bits with saturation.
struct ClassSize {
    unsigned __int128 value = 1;
    bool saturated = false;

    void multiply(std::uint64_t factor);
    std::string to_string() const; // decimal, or "overflow" when saturated
    bool fits_uint64() const;
    std::uint64_t as_uint64() const; // clamped to max when it does not fit

    bool operator==(const ClassSize&) const = default;
};

// The canonical encoding of a presentation: alpha_i is the consecutive block
// (B+1, ..., B+k_i); beta_j records relator j left to right, each letter
// consuming the lowest unused label of its generator's block; eps(label) is
// the sign of the letter that consumed the label.
//
// Requires every k_i >= 1 and no empty relator (throws ValidationError
// otherwise, carrying the diagnostics).
PermutationDataSet encode_canonical(const Presentation& p);

// Number of encodings of p of degree d = sum k_i. The full class has
// prod k_i! members (all bijections occurrences-of-x_i -> block labels).
// The reduced class pins each generator's first occurrence to its block
// minimum, quotienting the per-block label rotation, which is a relabelling
// under which every analysis result is invariant: prod (k_i - 1)! members.
ClassSize class_size(const Presentation& p, bool reduced);

// Streams the class in deterministic lexicographic order: relators scanned
// in order, occurrences left to right, free labels tried in increasing
// order. The canonical encoding is member 0. Every member shares alpha and
// decodes back to p up to rotation/reordering of relators. Constant memory
// per member; the cursor can seek to any index for chunked parallel scans.
class ClassEnumerator {
public:
    ClassEnumerator(Presentation p, bool reduced);

    ClassSize size() const;
    bool done() const { return done_; }
    std::uint64_t index() const { return index_; }

    PermutationDataSet current() const;
    bool advance();
    void seek(std::uint64_t index);
    std::optional<PermutationDataSet> next();

private:
    struct Occurrence {
        int gen;
        int sign;
        int relator; // 0-based
    };

    Presentation base_;
    bool reduced_;
    std::vector<Occurrence> occurrences_;
    std::vector<int> radix_;       // choices per occurrence, in scan order
    std::vector<int> digits_;      // current choice per occurrence
    std::vector<int> block_start_; // per generator (index gen-1), 1-based label
    std::vector<int> counts_;      // k_i per generator
    std::uint64_t index_ = 0;
    bool done_ = false;
};

} // namespace heegaard
