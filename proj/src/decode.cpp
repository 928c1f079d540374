#include "heegaard/decode.hpp"

namespace heegaard {

Presentation decode(const PermutationDataSet& ds) {
    Presentation p;
    p.generator_count = ds.alpha.cycle_count();
    p.relators.reserve(ds.beta.cycles.size());
    for (const auto& cycle : ds.beta.cycles) {
        Relator r;
        r.letters.reserve(cycle.size());
        for (int entry : cycle)
            r.letters.push_back({ds.alpha.cycle_of(entry), ds.epsilon.at(entry)});
        p.relators.push_back(std::move(r));
    }
    return p;
}

} // namespace heegaard
