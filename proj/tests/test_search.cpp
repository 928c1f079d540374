#include <doctest.h>

#include "heegaard/decode.hpp"
#include "heegaard/json_io.hpp"
#include "heegaard/search.hpp"
#include "support.hpp"

using namespace heegaard;

TEST_CASE("analyze_one: transitive input yields a single report") {
    const auto reports = analyze_one(testsupport::fig3_data());
    REQUIRE(reports.size() == 1);
    CHECK_FALSE(reports[0].closed);
    CHECK(reports[0].surface.genus == 2);
}

TEST_CASE("analyze_one: symmetric split yields two identical closed reports") {
    const auto ds = make_data_set({{1, 2}, {3, 4}}, {{1, 2}, {3, 4}}, {1, 1, 1, 1});
    const auto reports = analyze_one(ds);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0] == reports[1]);
    CHECK(reports[0].closed);
    CHECK(reports[0].surface.d == 2);
}

TEST_CASE("search: the one-relator torus presentation has an immediate witness") {
    const auto result = search_closed(parse_presentation("< x | x >"));
    CHECK(result.verdict == SearchVerdict::ClosedWitnessFound);
    REQUIRE(result.witnesses.size() == 1);
    CHECK(result.witnesses[0].index == 0);
    CHECK(result.witnesses[0].data_set == testsupport::torus_data());
    REQUIRE(result.witnesses[0].reports.size() == 1);
    CHECK(result.witnesses[0].reports[0].closed);
    CHECK(result.examined == 1);
    CHECK(result.class_size_full.value == 1);
}

TEST_CASE("search: member cap of zero aborts with nothing examined") {
    SearchOptions options;
    options.max_members = 0;
    const auto result = search_closed(parse_presentation("< x | x >"), options);
    CHECK(result.verdict == SearchVerdict::AbortedAtLimit);
    CHECK(result.examined == 0);
    CHECK(result.witnesses.empty());
}

TEST_CASE("search: invalid presentations are rejected") {
    CHECK_THROWS_AS(search_closed(parse_presentation("< x, y | x >")), ValidationError);
}

TEST_CASE("search: six-point example class, reduced and full scans agree") {
    const Presentation p = testsupport::fig3_presentation();

    SearchOptions reduced;
    const auto r = search_closed(p, reduced);
    CHECK(r.class_size_reduced.value == 6);
    CHECK(r.class_size_full.value == 48);
    CHECK((r.verdict == SearchVerdict::ClosedWitnessFound ||
           r.verdict == SearchVerdict::NoClosedDiagramInFamily));
    CHECK((r.verdict == SearchVerdict::ClosedWitnessFound) == !r.witnesses.empty());

    SearchOptions full;
    full.reduced = false;
    const auto f = search_closed(p, full);
    CHECK(f.examined == 48);
    CHECK(f.verdict == r.verdict);

    // The canonical member is not closed: tracing its corners gives b = 2,
    // so g(S) = 3 and neither side can be capped off. (The worked six-point
    // diagram sits elsewhere in the class, with b = 4 and genus 2 — members
    // of one class need not share genus.)
    const auto canonical_reports = analyze_one(encode_canonical(p));
    REQUIRE(canonical_reports.size() == 1);
    CHECK(canonical_reports[0].surface.boundary_count == 2);
    CHECK(canonical_reports[0].surface.genus == 3);
    CHECK_FALSE(canonical_reports[0].closed);
    CHECK_FALSE(canonical_reports[0].presents_group);
    for (const auto& w : r.witnesses) CHECK(w.index != 0);

    // A block rotation of the label set carries the worked diagram into this
    // class: beta = (1,3,5)(2,4,6) is relabel-equivalent to it.
    const auto rotated = make_data_set({{1, 2}, {3, 4, 5, 6}}, {{1, 3, 5}, {2, 4, 6}},
                                       {1, 1, -1, -1, -1, -1});
    CHECK(equivalent_presentations(decode(rotated), p));
    const auto rotated_report = analyze_one(rotated);
    CHECK(rotated_report[0].surface.genus == 2);
    CHECK_FALSE(rotated_report[0].closed);
}

TEST_CASE("search: reduced and full verdicts agree on random presentations") {
    testsupport::Rng rng(7601);
    int done = 0;
    while (done < 15) {
        const Presentation p = testsupport::random_reduced_presentation(rng, 2, 2, 4);
        if (p.total_letters() > 8) continue;
        const ClassSize size = class_size(p, false);
        if (size.value > 2000) continue;
        ++done;
        SearchOptions reduced;
        SearchOptions full;
        full.reduced = false;
        const auto r = search_closed(p, reduced);
        const auto f = search_closed(p, full);
        CHECK(r.verdict == f.verdict);
        CHECK((r.witnesses.empty() == f.witnesses.empty()));
    }
}

TEST_CASE("search: parallel and serial runs serialize identically") {
    testsupport::Rng rng(7602);
    for (int iter = 0; iter < 10; ++iter) {
        const Presentation p = testsupport::random_reduced_presentation(rng, 2, 2, 4);
        if (class_size(p, true).value > 3000) continue;
        SearchOptions serial;
        SearchOptions parallel;
        parallel.jobs = 8;
        const auto a = search_closed(p, serial);
        const auto b = search_closed(p, parallel);
        CHECK(nlohmann::json(a).dump() == nlohmann::json(b).dump());
    }
}

TEST_CASE("search: first-witness mode stops at the lexicographically first witness") {
    testsupport::Rng rng(7603);
    int compared = 0;
    for (int iter = 0; iter < 40 && compared < 5; ++iter) {
        const Presentation p = testsupport::random_reduced_presentation(rng, 2, 2, 3);
        if (class_size(p, true).value > 500) continue;
        SearchOptions all;
        const auto every = search_closed(p, all);
        if (every.witnesses.empty()) continue;
        ++compared;

        SearchOptions first;
        first.first_witness_only = true;
        for (int jobs : {1, 4}) {
            first.jobs = jobs;
            const auto one = search_closed(p, first);
            REQUIRE(one.witnesses.size() == 1);
            CHECK(one.witnesses[0].index == every.witnesses[0].index);
            CHECK(one.witnesses[0].data_set == every.witnesses[0].data_set);
            CHECK(one.examined == every.witnesses[0].index + 1);
        }
    }
    CHECK(compared > 0);
}

TEST_CASE("search: witnesses re-analyze as closed") {
    testsupport::Rng rng(7604);
    int checked = 0;
    for (int iter = 0; iter < 40 && checked < 30; ++iter) {
        const Presentation p = testsupport::random_reduced_presentation(rng, 2, 2, 3);
        if (class_size(p, true).value > 500) continue;
        const auto result = search_closed(p);
        for (const auto& w : result.witnesses) {
            const auto reports = analyze_one(w.data_set);
            CHECK(std::all_of(reports.begin(), reports.end(),
                              [](const AnalysisReport& r) { return r.closed; }));
            ++checked;
        }
    }
}
