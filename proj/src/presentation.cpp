#include "heegaard/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace heegaard {

namespace {

enum class TokenKind { LAngle, RAngle, Pipe, Comma, Caret, Minus, Name, Number, End };

struct Token {
    TokenKind kind;
    std::string text;
    long value = 0;
    std::size_t pos = 0;
};

const char* token_name(TokenKind k) {
    switch (k) {
        case TokenKind::LAngle: return "'<'";
        case TokenKind::RAngle: return "'>'";
        case TokenKind::Pipe: return "'|'";
        case TokenKind::Comma: return "','";
        case TokenKind::Caret: return "'^'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Name: return "name";
        case TokenKind::Number: return "number";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

// Exponents beyond this expand to absurd letter runs; refuse them early.
constexpr long kMaxExponentMagnitude = 1000000;

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        switch (c) {
            case '<': tokens.push_back({TokenKind::LAngle, "<", 0, start}); ++i; continue;
            case '>': tokens.push_back({TokenKind::RAngle, ">", 0, start}); ++i; continue;
            case '|': tokens.push_back({TokenKind::Pipe, "|", 0, start}); ++i; continue;
            case ',': tokens.push_back({TokenKind::Comma, ",", 0, start}); ++i; continue;
            case '^': tokens.push_back({TokenKind::Caret, "^", 0, start}); ++i; continue;
            case '-': tokens.push_back({TokenKind::Minus, "-", 0, start}); ++i; continue;
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i + 1;
            while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            tokens.push_back({TokenKind::Name, text.substr(i, j - i), 0, start});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            long value = 0;
            while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) {
                value = value * 10 + (text[j] - '0');
                if (value > kMaxExponentMagnitude)
                    throw ParseError(start, "exponent too large");
                ++j;
            }
            tokens.push_back({TokenKind::Number, text.substr(i, j - i), value, start});
            i = j;
            continue;
        }
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({TokenKind::End, "", 0, n});
    return tokens;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    Presentation parse() {
        expect(TokenKind::LAngle);
        Presentation p;
        std::vector<std::string> names;
        std::map<std::string, int> index_of;

        for (;;) {
            const Token name = expect(TokenKind::Name);
            if (index_of.count(name.text))
                throw ParseError(name.pos, "duplicate generator name '" + name.text + "'");
            names.push_back(name.text);
            index_of[name.text] = static_cast<int>(names.size());
            if (peek().kind == TokenKind::Comma) {
                advance();
                continue;
            }
            break;
        }
        expect(TokenKind::Pipe);

        p.generator_count = static_cast<int>(names.size());
        p.generator_names = std::move(names);

        if (peek().kind != TokenKind::RAngle) {
            for (;;) {
                p.relators.push_back(parse_relator(index_of));
                if (peek().kind == TokenKind::Comma) {
                    advance();
                    continue;
                }
                break;
            }
        }
        expect(TokenKind::RAngle);
        if (peek().kind != TokenKind::End)
            throw ParseError(peek().pos, "trailing input after '>'");
        return p;
    }

private:
    Relator parse_relator(const std::map<std::string, int>& index_of) {
        Relator r;
        if (peek().kind != TokenKind::Name)
            throw ParseError(peek().pos, std::string("expected name, found ") + token_name(peek().kind));
        while (peek().kind == TokenKind::Name) {
            const Token name = advance();
            const auto it = index_of.find(name.text);
            if (it == index_of.end())
                throw ParseError(name.pos, "undeclared generator '" + name.text + "'");
            long exponent = 1;
            if (peek().kind == TokenKind::Caret) {
                advance();
                bool negative = false;
                if (peek().kind == TokenKind::Minus) {
                    advance();
                    negative = true;
                }
                const Token num = expect(TokenKind::Number);
                exponent = negative ? -num.value : num.value;
            }
            const int sign = exponent >= 0 ? 1 : -1;
            for (long k = 0; k < (exponent >= 0 ? exponent : -exponent); ++k)
                r.letters.push_back({it->second, sign});
        }
        return r;
    }

    const Token& peek() const { return tokens_[cursor_]; }
    Token advance() { return tokens_[cursor_++]; }
    Token expect(TokenKind kind) {
        if (peek().kind != kind)
            throw ParseError(peek().pos, std::string("expected ") + token_name(kind) +
                                             ", found " + token_name(peek().kind));
        return advance();
    }

    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
};

} // namespace

std::string Presentation::name_of(int gen) const {
    if (generator_names && gen >= 1 && gen <= static_cast<int>(generator_names->size()))
        return (*generator_names)[gen - 1];
    return "x" + std::to_string(gen);
}

std::vector<int> Presentation::occurrence_counts() const {
    std::vector<int> counts(static_cast<std::size_t>(generator_count), 0);
    for (const auto& r : relators)
        for (const auto& l : r.letters)
            ++counts[static_cast<std::size_t>(l.gen - 1)];
    return counts;
}

int Presentation::total_letters() const {
    int total = 0;
    for (const auto& r : relators) total += r.length();
    return total;
}

bool Presentation::same_words(const Presentation& other) const {
    return generator_count == other.generator_count && relators == other.relators;
}

bool is_valid_generator_name(const std::string& name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Presentation parse_presentation(const std::string& text) {
    return Parser(text).parse();
}

std::string render_presentation(const Presentation& p) {
    std::ostringstream out;
    out << "<";
    for (int g = 1; g <= p.generator_count; ++g)
        out << (g == 1 ? " " : ", ") << p.name_of(g);
    out << " |";
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
        const Relator& r = p.relators[ri];
        out << (ri == 0 ? " " : ", ");
        if (r.empty()) {
            out << p.name_of(1) << "^0";
            continue;
        }
        std::size_t i = 0;
        bool first = true;
        while (i < r.letters.size()) {
            std::size_t j = i;
            while (j < r.letters.size() && r.letters[j] == r.letters[i]) ++j;
            const long run = static_cast<long>(j - i);
            if (!first) out << ' ';
            first = false;
            out << p.name_of(r.letters[i].gen);
            if (r.letters[i].sign < 0)
                out << "^-" << run;
            else if (run > 1)
                out << '^' << run;
            i = j;
        }
    }
    out << " >";
    return out.str();
}

Presentation trivially_reduce(const Presentation& p) {
    Presentation out = p;
    for (auto& r : out.relators) {
        std::vector<Letter> stack;
        for (const Letter& l : r.letters) {
            if (!stack.empty() && stack.back().gen == l.gen && stack.back().sign == -l.sign)
                stack.pop_back();
            else
                stack.push_back(l);
        }
        r.letters = std::move(stack);
    }
    return out;
}

std::vector<Diagnostic> validate_for_encoding(const Presentation& p) {
    std::vector<Diagnostic> out;
    const std::vector<int> counts = p.occurrence_counts();
    for (int g = 1; g <= p.generator_count; ++g) {
        if (counts[static_cast<std::size_t>(g - 1)] == 0) {
            out.push_back({Diagnostic::Kind::UnusedGenerator, g,
                           "generator " + p.name_of(g) + " unused (k_" + std::to_string(g) + " = 0)"});
        }
    }
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
        if (p.relators[ri].empty()) {
            out.push_back({Diagnostic::Kind::EmptyRelator, static_cast<int>(ri + 1),
                           "empty relator " + std::to_string(ri + 1)});
        }
    }
    return out;
}

Relator canonical_rotation(const Relator& r) {
    const std::size_t k = r.letters.size();
    if (k <= 1) return r;
    Relator best = r;
    Relator candidate = r;
    for (std::size_t s = 1; s < k; ++s) {
        std::rotate(candidate.letters.begin(), candidate.letters.begin() + 1, candidate.letters.end());
        if (candidate < best) best = candidate;
    }
    return best;
}

bool cyclically_equal(const Relator& a, const Relator& b) {
    if (a.letters.size() != b.letters.size()) return false;
    return canonical_rotation(a) == canonical_rotation(b);
}

bool equivalent_presentations(const Presentation& a, const Presentation& b) {
    if (a.generator_count != b.generator_count) return false;
    if (a.relators.size() != b.relators.size()) return false;
    std::vector<Relator> ca, cb;
    ca.reserve(a.relators.size());
    cb.reserve(b.relators.size());
    for (const auto& r : a.relators) ca.push_back(canonical_rotation(r));
    for (const auto& r : b.relators) cb.push_back(canonical_rotation(r));
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
}

} // namespace heegaard
