#include "heegaard/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

namespace heegaard {

const char* to_string(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::ClosedWitnessFound: return "closed-witness-found";
        case SearchVerdict::NoClosedDiagramInFamily: return "no-closed-diagram-in-family";
        case SearchVerdict::AbortedAtLimit: return "aborted-at-limit";
    }
    return "?";
}

std::vector<AnalysisReport> analyze_one(const PermutationDataSet& ds) {
    std::vector<AnalysisReport> reports;
    for (const PermutationDataSet& part : split_connected_sum(ds))
        reports.push_back(analyze(part));
    return reports;
}

namespace {

struct MemberOutcome {
    bool closed = false;
    std::vector<AnalysisReport> reports;
};

MemberOutcome evaluate(const PermutationDataSet& ds) {
    MemberOutcome out;
    out.reports = analyze_one(ds);
    out.closed = std::all_of(out.reports.begin(), out.reports.end(),
                             [](const AnalysisReport& r) { return r.closed; });
    return out;
}

// Fills outcomes[i] = evaluate(members[i]) using `jobs` worker threads.
// Slot assignment order is irrelevant to the result; outcomes land by index.
void evaluate_batch(const std::vector<PermutationDataSet>& members,
                    std::vector<MemberOutcome>& outcomes, int jobs) {
    const std::size_t count = members.size();
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) outcomes[i] = evaluate(members[i]);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> workers;
    const int worker_count = std::min<int>(jobs, static_cast<int>(count));
    workers.reserve(static_cast<std::size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    outcomes[i] = evaluate(members[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace

SearchResult search_closed(const Presentation& p, const SearchOptions& options) {
    const auto start_time = std::chrono::steady_clock::now();

    SearchResult result;
    result.presentation = p;
    result.options = options;
    result.class_size_full = class_size(p, false);
    result.class_size_reduced = class_size(p, true);

    ClassEnumerator enumerator(p, options.reduced);
    const ClassSize total = enumerator.size();
    const std::uint64_t limit =
        total.fits_uint64() ? std::min<std::uint64_t>(total.as_uint64(), options.max_members)
                            : options.max_members;

    const std::uint64_t batch_size =
        options.jobs > 1 ? static_cast<std::uint64_t>(options.jobs) * 64 : 256;

    std::uint64_t processed = 0;
    bool stopped_early = false;
    while (processed < limit && !stopped_early) {
        const std::uint64_t count = std::min<std::uint64_t>(batch_size, limit - processed);
        std::vector<PermutationDataSet> members;
        members.reserve(static_cast<std::size_t>(count));
        for (std::uint64_t i = 0; i < count; ++i) {
            auto member = enumerator.next();
            members.push_back(std::move(*member));
        }
        std::vector<MemberOutcome> outcomes(members.size());
        evaluate_batch(members, outcomes, options.jobs);
        for (std::uint64_t i = 0; i < count; ++i) {
            if (!outcomes[static_cast<std::size_t>(i)].closed) continue;
            result.witnesses.push_back({processed + i, std::move(members[static_cast<std::size_t>(i)]),
                                        std::move(outcomes[static_cast<std::size_t>(i)].reports)});
            if (options.first_witness_only) {
                result.examined = processed + i + 1;
                stopped_early = true;
                break;
            }
        }
        if (!stopped_early) processed += count;
    }
    if (!stopped_early) result.examined = processed;

    if (!result.witnesses.empty())
        result.verdict = SearchVerdict::ClosedWitnessFound;
    else if (!total.saturated && static_cast<unsigned __int128>(result.examined) == total.value)
        result.verdict = SearchVerdict::NoClosedDiagramInFamily;
    else
        result.verdict = SearchVerdict::AbortedAtLimit;

    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_time)
            .count();
    return result;
}

} // namespace heegaard
