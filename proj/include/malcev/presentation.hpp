// Signed-letter words and finite group presentations, plus the line-oriented
// text format the CLI reads: first line lists generator labels, every later
// nonempty line is one relator, with uppercase or a trailing apostrophe
// marking an inverse letter.
#pragma once

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "integer_matrix.hpp"

namespace malcev {

struct Letter {
    std::size_t gen = 0;
    int sign = 1;  // +1 or -1

    bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->gen, -it->sign});
    return out;
}

inline Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    std::size_t generator_count() const { return generators.size(); }

    void validate() const {
        for (const Word& r : relators)
            for (const Letter& l : r) {
                if (l.gen >= generators.size())
                    throw internal_error("presentation: letter out of range");
                if (l.sign != 1 && l.sign != -1)
                    throw internal_error("presentation: bad letter sign");
            }
    }
};

// Artin presentations are ordinary presentations whose relators are braid
// relations; they share the type.
using ArtinPresentation = GroupPresentation;

inline std::string format_letter(const Letter& l, const GroupPresentation& p) {
    const std::string& g = p.generators[l.gen];
    return l.sign > 0 ? g : g + "'";
}

inline std::string format_word(const Word& w, const GroupPresentation& p) {
    std::string s;
    for (const Letter& l : w) {
        if (!s.empty())
            s += ' ';
        s += format_letter(l, p);
    }
    return s;
}

namespace detail {

inline std::string to_upper(const std::string& s) {
    std::string out = s;
    for (char& ch : out)
        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return out;
}

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t)
        toks.push_back(t);
    return toks;
}

}  // namespace detail

inline GroupPresentation parse_presentation(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    GroupPresentation p;

    if (!std::getline(is, line))
        throw input_error("presentation: empty input");
    p.generators = detail::split_ws(line);
    if (p.generators.empty())
        throw input_error("presentation: line 1: no generators");
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        for (std::size_t j = i + 1; j < p.generators.size(); ++j)
            if (p.generators[i] == p.generators[j])
                throw input_error("presentation: line 1: duplicate generator '" +
                                  p.generators[i] + "'");

    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        std::vector<std::string> toks = detail::split_ws(line);
        if (toks.empty())
            continue;
        Word r;
        for (const std::string& tok : toks) {
            Letter l;
            bool matched = false;
            for (std::size_t g = 0; g < p.generators.size() && !matched; ++g) {
                if (tok == p.generators[g]) {
                    l = {g, 1};
                    matched = true;
                } else if (tok == p.generators[g] + "'") {
                    l = {g, -1};
                    matched = true;
                } else if (tok == detail::to_upper(p.generators[g]) &&
                           tok != p.generators[g]) {
                    l = {g, -1};
                    matched = true;
                }
            }
            if (!matched)
                throw input_error("presentation: line " + std::to_string(lineno) +
                                  ": unknown letter '" + tok + "'");
            r.push_back(l);
        }
        p.relators.push_back(std::move(r));
    }
    return p;
}

// Column k holds the exponent sums of relator k.
inline IntegerMatrix exponent_matrix(const GroupPresentation& p) {
    IntegerMatrix m(p.generator_count(), p.relators.size());
    for (std::size_t k = 0; k < p.relators.size(); ++k)
        for (const Letter& l : p.relators[k])
            m(l.gen, k) += l.sign;
    return m;
}

inline AbelianGroup abelianization(const GroupPresentation& p) {
    p.validate();
    return cokernel(exponent_matrix(p));
}

}  // namespace malcev
