#pragma once

#include <cstdint>
#include <vector>

#include "heegaard/boundary.hpp"
#include "heegaard/encode.hpp"

namespace heegaard {

struct SearchOptions {
    bool reduced = true;
    std::uint64_t max_members = 1000000;
    int jobs = 1;
    bool first_witness_only = false;
};

enum class SearchVerdict { ClosedWitnessFound, NoClosedDiagramInFamily, AbortedAtLimit };

const char* to_string(SearchVerdict v);

// A class member whose every connected-sum constituent is closed, together
// with the constituents' reports (a single report for transitive members).
struct Witness {
    std::uint64_t index = 0;
    PermutationDataSet data_set;
    std::vector<AnalysisReport> reports;
};

struct SearchResult {
    Presentation presentation;
    ClassSize class_size_full;
    ClassSize class_size_reduced;
    std::uint64_t examined = 0;
    std::vector<Witness> witnesses;
    SearchVerdict verdict = SearchVerdict::AbortedAtLimit;
    SearchOptions options;
    double elapsed_ms = 0.0; // wall time; excluded from serialized results
};

// Splits the data set and analyzes each constituent, in split order. Always
// a singleton for transitive inputs. The member represents a closed
// manifold iff every report is closed.
std::vector<AnalysisReport> analyze_one(const PermutationDataSet& ds);

// Scans the encoding class of p in lexicographic member order, looking for
// members whose manifold is closed. Witness order, examined counts and the
// verdict are identical for any jobs value: parallel runs analyze fixed
// index batches and merge by index.
//
// Verdict rules: witnesses found -> ClosedWitnessFound; the whole class
// examined without a witness -> NoClosedDiagramInFamily; otherwise the
// member cap was hit -> AbortedAtLimit. With first_witness_only the scan
// stops at the first witness and examined counts the members up to and
// including it.
//
// Throws ValidationError when p fails validate_for_encoding.
SearchResult search_closed(const Presentation& p, const SearchOptions& options = {});

} // namespace heegaard
