#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "heegaard/errors.hpp"

namespace heegaard {

// One letter x_g^sign of a relator word. Generators are identified by a
// 1-based index; sign is +1 or -1.
struct Letter {
    int gen = 0;
    int sign = 1;
    auto operator<=>(const Letter&) const = default;
};

struct Relator {
    std::vector<Letter> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    auto operator<=>(const Relator&) const = default;
};

// A finite group presentation < x_1, ..., x_m | r_1, ..., r_n >.
//
// Generator names are display metadata only; all identity is by index.
struct Presentation {
    int generator_count = 0;
    std::vector<Relator> relators;
    std::optional<std::vector<std::string>> generator_names;

    // Stored name, or "x<gen>" when no names were attached.
    std::string name_of(int gen) const;

    // k_i = number of letters using generator i (either sign), indexed by
    // gen-1. The total over all i is the degree d of any encoding.
    std::vector<int> occurrence_counts() const;
    int total_letters() const;

    // Structural equality, ignoring display names.
    bool same_words(const Presentation& other) const;

    bool operator==(const Presentation&) const = default;
};

// Accepts [A-Za-z][A-Za-z0-9_]*.
bool is_valid_generator_name(const std::string& name);

// Parses the text form
//
//   presentation := "<" gen-list "|" relator-list ">"
//   gen-list     := name ("," name)*
//   relator-list := relator ("," relator)*      (may be empty)
//   relator      := term+
//   term         := name exponent?
//   exponent     := "^" "-"? digit+
//
// Exponents are expanded to letter runs (x^3 -> x x x, x^-2 -> two inverse
// letters, x^0 -> nothing). No reduction is performed.
// Throws ParseError on syntax errors, undeclared generators, duplicate
// generator names.
Presentation parse_presentation(const std::string& text);

// Inverse of parse_presentation: parse(render(p)) == p for any valid p
// (an empty relator is rendered as "<name>^0", which parses back to empty).
std::string render_presentation(const Presentation& p);

// Removes adjacent inverse pairs x x^-1 / x^-1 x from every relator, to a
// fixed point. Cyclically adjacent pairs (first letter vs last) are left
// alone: cancelling them would change the degree d of the encoding family.
// Relator order, relator count and the generator set are unchanged.
Presentation trivially_reduce(const Presentation& p);

struct Diagnostic {
    enum class Kind { UnusedGenerator, EmptyRelator };
    Kind kind;
    int index; // 1-based generator or relator index
    std::string message;
};

// Checks the preconditions of the encoding step: every generator must occur
// at least once (k_i >= 1) and no relator may be empty. Returns diagnostics
// instead of throwing; an empty list means the presentation is encodable.
std::vector<Diagnostic> validate_for_encoding(const Presentation& p);

// Relators produced by the permutation pipeline are only defined up to
// rotation of the word, so comparisons go through canonical rotations.
Relator canonical_rotation(const Relator& r);
bool cyclically_equal(const Relator& a, const Relator& b);

// Same generator count and the same multiset of relators-up-to-rotation.
bool equivalent_presentations(const Presentation& a, const Presentation& b);

} // namespace heegaard
