#include "heegaard/json_io.hpp"

#include <set>

namespace heegaard {

using nlohmann::json;

void to_json(json& j, const Presentation& p) {
    json generators = json::array();
    for (int g = 1; g <= p.generator_count; ++g) generators.push_back(p.name_of(g));
    json relators = json::array();
    for (const auto& r : p.relators) {
        json word = json::array();
        for (const auto& l : r.letters) word.push_back(json::array({l.gen, l.sign}));
        relators.push_back(std::move(word));
    }
    j = json{{"generators", std::move(generators)}, {"relators", std::move(relators)}};
}

void from_json(const json& j, Presentation& p) {
    if (!j.is_object() || !j.contains("generators") || !j.contains("relators"))
        throw ValidationError("presentation JSON must have 'generators' and 'relators'");
    const json& generators = j.at("generators");
    if (!generators.is_array() || generators.empty())
        throw ValidationError("'generators' must be a non-empty array of names");
    std::vector<std::string> names;
    std::set<std::string> unique;
    for (const json& g : generators) {
        if (!g.is_string() || !is_valid_generator_name(g.get<std::string>()))
            throw ValidationError("invalid generator name in 'generators'");
        if (!unique.insert(g.get<std::string>()).second)
            throw ValidationError("duplicate generator name '" + g.get<std::string>() + "'");
        names.push_back(g.get<std::string>());
    }
    p = Presentation{};
    p.generator_count = static_cast<int>(names.size());
    p.generator_names = std::move(names);

    const json& relators = j.at("relators");
    if (!relators.is_array()) throw ValidationError("'relators' must be an array");
    for (const json& word : relators) {
        if (!word.is_array()) throw ValidationError("each relator must be an array of letters");
        Relator r;
        for (const json& letter : word) {
            if (!letter.is_array() || letter.size() != 2 || !letter[0].is_number_integer() ||
                !letter[1].is_number_integer())
                throw ValidationError("each letter must be [generatorIndex, sign]");
            const int gen = letter[0].get<int>();
            const int sign = letter[1].get<int>();
            if (gen < 1 || gen > p.generator_count)
                throw ValidationError("letter generator index " + std::to_string(gen) +
                                      " out of range");
            if (sign != 1 && sign != -1)
                throw ValidationError("letter sign must be +1 or -1");
            r.letters.push_back({gen, sign});
        }
        p.relators.push_back(std::move(r));
    }
}

namespace {

json cycles_json(const CyclePermutation& p) {
    json out = json::array();
    for (const auto& cycle : p.cycles) out.push_back(cycle);
    return out;
}

std::vector<std::vector<int>> cycles_from_json(const json& j, const char* key) {
    if (!j.is_array()) throw ValidationError(std::string("'") + key + "' must be an array of cycles");
    std::vector<std::vector<int>> cycles;
    for (const json& cycle : j) {
        if (!cycle.is_array()) throw ValidationError(std::string("'") + key + "' cycles must be arrays");
        std::vector<int> c;
        for (const json& e : cycle) {
            if (!e.is_number_integer())
                throw ValidationError(std::string("'") + key + "' entries must be integers");
            c.push_back(e.get<int>());
        }
        cycles.push_back(std::move(c));
    }
    return cycles;
}

} // namespace

void to_json(json& j, const PermutationDataSet& ds) {
    std::vector<int> epsilon;
    epsilon.reserve(static_cast<std::size_t>(ds.degree()));
    for (int i = 1; i <= ds.degree(); ++i) epsilon.push_back(ds.epsilon.at(i));
    j = json{{"d", ds.degree()},
             {"alpha", cycles_json(ds.alpha)},
             {"beta", cycles_json(ds.beta)},
             {"epsilon", std::move(epsilon)}};
}

void from_json(const json& j, PermutationDataSet& ds) {
    for (const char* key : {"d", "alpha", "beta", "epsilon"})
        if (!j.is_object() || !j.contains(key))
            throw ValidationError(std::string("data set JSON must have '") + key + "'");
    if (!j.at("d").is_number_integer()) throw ValidationError("'d' must be an integer");
    const int d = j.at("d").get<int>();
    const json& eps = j.at("epsilon");
    if (!eps.is_array()) throw ValidationError("'epsilon' must be an array");
    std::vector<int> signs;
    for (const json& e : eps) {
        if (!e.is_number_integer()) throw ValidationError("'epsilon' entries must be integers");
        signs.push_back(e.get<int>());
    }
    ds = make_data_set(d, cycles_from_json(j.at("alpha"), "alpha"),
                       cycles_from_json(j.at("beta"), "beta"), signs);
}

void to_json(json& j, const SideSummary& s) {
    j = json{{"components", s.component_count},
             {"curves", s.curve_count},
             {"boundaryGenus", s.boundary_genus},
             {"empty", s.empty_boundary}};
}

void to_json(json& j, const AnalysisReport& r) {
    j = json{{"d", r.surface.d},
             {"b", r.surface.boundary_count},
             {"genusS", r.surface.genus},
             {"x", r.x_side},
             {"y", r.y_side},
             {"closed", r.closed},
             {"presentsGroup", r.presents_group}};
}

json class_size_json(const ClassSize& size) {
    constexpr unsigned __int128 kDoubleSafe = (static_cast<unsigned __int128>(1) << 53);
    if (!size.saturated && size.value <= kDoubleSafe)
        return static_cast<std::uint64_t>(size.value);
    return size.to_string();
}

void to_json(json& j, const Witness& w) {
    j = json{{"index", w.index}, {"dataSet", w.data_set}, {"reports", w.reports}};
}

void to_json(json& j, const SearchResult& r) {
    j = json{{"presentation", r.presentation},
             {"classSizeFull", class_size_json(r.class_size_full)},
             {"classSizeReduced", class_size_json(r.class_size_reduced)},
             {"examined", r.examined},
             {"limits", json{{"reduced", r.options.reduced},
                             {"maxMembers", r.options.max_members},
                             {"firstWitnessOnly", r.options.first_witness_only}}},
             {"verdict", to_string(r.verdict)},
             {"witnesses", r.witnesses}};
}

json orbits_json(const OrbitPartition& orbits) {
    json out = json::array();
    for (const auto& orbit : orbits.orbits) {
        json one = json::array();
        for (const Corner& c : orbit) one.push_back(json::array({c.point, c.quadrant}));
        out.push_back(std::move(one));
    }
    return out;
}

} // namespace heegaard
