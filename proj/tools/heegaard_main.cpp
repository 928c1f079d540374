// Command-line front end for the permutation-data pipeline.
//
// Exit codes: 0 success, 1 usage error, 2 input validation error,
// 3 search/enumeration aborted at the member limit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "heegaard/decode.hpp"
#include "heegaard/json_io.hpp"
#include "heegaard/search.hpp"

namespace {

using heegaard::AnalysisReport;
using heegaard::ClassEnumerator;
using heegaard::PermutationDataSet;
using heegaard::Presentation;
using heegaard::SearchOptions;
using heegaard::SearchResult;
using heegaard::SearchVerdict;
using heegaard::Side;
using heegaard::SideSummary;
using nlohmann::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

using Input = std::variant<Presentation, PermutationDataSet>;

// Input type comes from --as when given, else from the extension (.pres is
// presentation text, .json is sniffed by its keys).
Input load_input(const std::string& path, const std::string& as) {
    const std::string text = read_file(path);
    if (as == "pres") return heegaard::parse_presentation(text);
    if (as == "perm") {
        PermutationDataSet ds = json::parse(text).get<PermutationDataSet>();
        return ds;
    }
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".pres") == 0)
        return heegaard::parse_presentation(text);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        const json j = json::parse(text);
        if (j.is_object() && j.contains("alpha")) return j.get<PermutationDataSet>();
        if (j.is_object() && j.contains("generators")) return j.get<Presentation>();
        throw InputError("unrecognized JSON input: expected a data set or a presentation");
    }
    throw InputError("cannot determine input type of '" + path + "'; use --as {pres,perm}");
}

Presentation require_presentation(Input&& input) {
    if (auto* p = std::get_if<Presentation>(&input)) return std::move(*p);
    throw InputError("this command expects a presentation input");
}

PermutationDataSet require_data_set(Input&& input) {
    if (auto* ds = std::get_if<PermutationDataSet>(&input)) return std::move(*ds);
    throw InputError("this command expects a permutation data set input");
}

// The pipeline treats presentations as trivially reduced; reduce up front
// and say so when that changed the word (the degree changes with it).
Presentation prepare_presentation(Input&& input) {
    Presentation p = require_presentation(std::move(input));
    Presentation reduced = heegaard::trivially_reduce(p);
    if (!reduced.same_words(p)) {
        std::cerr << "note: input was not trivially reduced; reduced it (degree "
                  << p.total_letters() << " -> " << reduced.total_letters() << ")\n";
    }
    const auto diagnostics = heegaard::validate_for_encoding(reduced);
    if (!diagnostics.empty()) {
        for (const auto& d : diagnostics) std::cerr << "error: " << d.message << "\n";
        throw InputError("presentation cannot be encoded");
    }
    return reduced;
}

std::string cycles_text(const heegaard::CyclePermutation& p) {
    std::ostringstream out;
    for (const auto& cycle : p.cycles) {
        out << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? "," : "") << cycle[i];
        out << ')';
    }
    return out.str();
}

void print_data_set_text(const PermutationDataSet& ds) {
    std::cout << "d = " << ds.degree() << "\n";
    std::cout << "alpha = " << cycles_text(ds.alpha) << "\n";
    std::cout << "beta = " << cycles_text(ds.beta) << "\n";
    std::cout << "epsilon = (";
    for (int i = 1; i <= ds.degree(); ++i) std::cout << (i > 1 ? "," : "") << ds.epsilon.at(i);
    std::cout << ")\n";
}

void print_side_text(const SideSummary& s) {
    std::cout << "  " << (s.side == Side::X ? "X" : "Y") << " side: components=" << s.component_count
              << " curves=" << s.curve_count << " boundary-genus=" << s.boundary_genus
              << " empty=" << (s.empty_boundary ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < s.components.size(); ++i) {
        const auto& c = s.components[i];
        std::cout << "    class " << i + 1 << ": polygons=" << c.polygon_count
                  << " matched-edges=" << c.matched_edges << " tags=" << c.tag_count
                  << " euler=" << c.euler << " genus=" << c.genus
                  << " planar=" << (c.planar ? "yes" : "no") << "\n";
    }
}

void print_report_text(const AnalysisReport& r) {
    std::cout << "d=" << r.surface.d << " b=" << r.surface.boundary_count
              << " genus(S)=" << r.surface.genus << "\n";
    print_side_text(r.x_side);
    print_side_text(r.y_side);
    std::cout << "  closed: " << (r.closed ? "yes" : "no") << "\n";
    std::cout << "  presents-group: " << (r.presents_group ? "yes" : "no") << "\n";
}

int run_encode(const std::string& path, const std::string& as, bool text) {
    const Presentation p = prepare_presentation(load_input(path, as));
    const PermutationDataSet ds = heegaard::encode_canonical(p);
    if (text)
        print_data_set_text(ds);
    else
        std::cout << json(ds).dump(2) << "\n";
    return 0;
}

int run_decode(const std::string& path, const std::string& as, bool text) {
    const PermutationDataSet ds = require_data_set(load_input(path, as));
    const Presentation p = heegaard::decode(ds);
    if (text)
        std::cout << heegaard::render_presentation(p) << "\n";
    else
        std::cout << json(p).dump(2) << "\n";
    return 0;
}

int run_analyze(const std::string& path, const std::string& as, bool text, bool with_orbits) {
    const PermutationDataSet ds = require_data_set(load_input(path, as));
    const auto parts = heegaard::split_connected_sum(ds);
    std::vector<AnalysisReport> reports;
    for (const auto& part : parts) reports.push_back(heegaard::analyze(part));

    if (text) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts.size() > 1) std::cout << "constituent " << i + 1 << ":\n";
            print_report_text(reports[i]);
        }
        return 0;
    }

    const auto report_json = [&](std::size_t i) {
        json j = reports[i];
        if (with_orbits) j["orbits"] = heegaard::orbits_json(heegaard::orbit_partition(parts[i]));
        return j;
    };
    if (parts.size() == 1) {
        std::cout << report_json(0).dump(2) << "\n";
    } else {
        json j;
        j["closed"] = std::all_of(reports.begin(), reports.end(),
                                  [](const AnalysisReport& r) { return r.closed; });
        j["constituents"] = json::array();
        for (std::size_t i = 0; i < parts.size(); ++i) j["constituents"].push_back(report_json(i));
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int run_search(const std::string& path, const std::string& as, const SearchOptions& options,
               bool text) {
    const Presentation p = prepare_presentation(load_input(path, as));
    const SearchResult result = heegaard::search_closed(p, options);
    std::cerr << "search examined " << result.examined << " member(s) in " << result.elapsed_ms
              << " ms\n";
    if (text) {
        std::cout << "verdict: " << heegaard::to_string(result.verdict) << "\n";
        std::cout << "class size: full " << result.class_size_full.to_string() << ", reduced "
                  << result.class_size_reduced.to_string() << "\n";
        std::cout << "examined: " << result.examined << "\n";
        std::cout << "witnesses: " << result.witnesses.size() << "\n";
        if (!result.witnesses.empty()) {
            std::cout << "first witness (member " << result.witnesses.front().index << "):\n";
            print_data_set_text(result.witnesses.front().data_set);
        }
    } else {
        std::cout << json(result).dump(2) << "\n";
    }
    return result.verdict == SearchVerdict::AbortedAtLimit ? 3 : 0;
}

int run_enumerate(const std::string& path, const std::string& as, bool reduced,
                  std::uint64_t max_members) {
    const Presentation p = prepare_presentation(load_input(path, as));
    ClassEnumerator enumerator(p, reduced);
    std::uint64_t emitted = 0;
    while (emitted < max_members) {
        const auto member = enumerator.next();
        if (!member) break;
        std::cout << json(*member).dump() << "\n";
        ++emitted;
    }
    if (!enumerator.done()) {
        std::cerr << "stopped at --max-members " << max_members << " before exhausting the class\n";
        return 3;
    }
    return 0;
}

int run_export_dot(const std::string& path, const std::string& as) {
    const PermutationDataSet ds = require_data_set(load_input(path, as));
    std::cout << heegaard::ribbon_graph_dot(ds);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        heegaard::corner_flow_self_check();
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        return 1;
    }

    CLI::App app{"Heegaard-diagram analysis over signed permutation data"};
    app.require_subcommand(1);

    std::string path;
    std::string as;
    bool text = false;
    bool with_orbits = false;
    bool full = false;
    SearchOptions options;

    const auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", path, "input file (.pres or .json)")->required();
        cmd->add_option("--as", as, "force input type")->check(CLI::IsMember({"pres", "perm"}));
    };

    CLI::App* encode = app.add_subcommand("encode", "presentation -> canonical data set");
    add_input(encode);
    encode->add_flag("--text", text, "human-readable output");

    CLI::App* decode = app.add_subcommand("decode", "data set -> presentation");
    add_input(decode);
    decode->add_flag("--text", text, "human-readable output");

    CLI::App* analyze = app.add_subcommand("analyze", "data set -> analysis report");
    add_input(analyze);
    analyze->add_flag("--text", text, "human-readable output");
    analyze->add_flag("--orbits", with_orbits, "include boundary orbits in the report");

    CLI::App* search = app.add_subcommand("search", "scan the encoding class for closed diagrams");
    add_input(search);
    search->add_flag("--text", text, "human-readable output");
    search->add_flag("--full", full, "enumerate the full class (default: reduced)");
    search->add_flag("--reduced", "enumerate the reduced class (default)");
    search->add_option("--max-members", options.max_members, "member cap")->capture_default_str();
    search->add_option("--jobs", options.jobs, "parallel analysis workers")->capture_default_str();
    search->add_flag("--first-witness", options.first_witness_only, "stop at the first witness");

    CLI::App* enumerate = app.add_subcommand("enumerate", "stream class members as JSON lines");
    add_input(enumerate);
    enumerate->add_flag("--full", full, "enumerate the full class (default: reduced)");
    enumerate->add_flag("--reduced", "enumerate the reduced class (default)");
    enumerate->add_option("--max-members", options.max_members, "member cap")->capture_default_str();

    CLI::App* export_dot = app.add_subcommand("export-dot", "data set -> ribbon graph (DOT)");
    add_input(export_dot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }
    options.reduced = !full;

    try {
        if (encode->parsed()) return run_encode(path, as, text);
        if (decode->parsed()) return run_decode(path, as, text);
        if (analyze->parsed()) return run_analyze(path, as, text, with_orbits);
        if (search->parsed()) return run_search(path, as, options, text);
        if (enumerate->parsed()) return run_enumerate(path, as, options.reduced, options.max_members);
        if (export_dot->parsed()) return run_export_dot(path, as);
    } catch (const heegaard::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const heegaard::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
