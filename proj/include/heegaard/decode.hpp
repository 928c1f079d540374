#pragma once

#include "heegaard/permdata.hpp"
#include "heegaard/presentation.hpp"

namespace heegaard {

// Reads the presentation off a permutation data set: one generator per
// alpha-cycle, one relator per beta-cycle. Relator j walks the j-th stored
// beta-cycle from its smallest element, emitting the letter
// x_{a(entry)}^{eps(entry)} where a(entry) is the alpha-cycle containing the
// entry. No reduction is performed; the output may contain x x^-1 pairs.
//
// Because cycles are stored in normal form, the output is deterministic;
// relators are defined by the data only up to rotation and reordering, so
// compare results with equivalent_presentations.
Presentation decode(const PermutationDataSet& ds);

} // namespace heegaard
