// Irreducible complex reflection groups: the three-parameter monomial family
// G(de, e, n) with exact hyperplane-orbit counting, the closed-form count of
// reflecting-hyperplane orbits, a classification table for the exceptional
// groups, and the rational homotopy descriptor of the attached braid group.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "integer_matrix.hpp"
#include "pclie.hpp"

namespace malcev {

struct FamilyParams {
    long d = 1;  // the group is G(de, e, n) on n coordinates
    long e = 1;
    long n = 1;

    long m() const { return d * e; }  // entries are m-th roots of unity

    bool operator==(const FamilyParams&) const = default;
};

// Either a monomial family member or an exceptional group G4..G37.
struct ReflectionGroupSpec {
    std::optional<FamilyParams> family;
    int exceptional = 0;

    std::string str() const {
        if (family)
            return "G(" + std::to_string(family->m()) + "," + std::to_string(family->e) +
                   "," + std::to_string(family->n) + ")";
        return "G" + std::to_string(exceptional);
    }

    bool operator==(const ReflectionGroupSpec&) const = default;
};

// Accepts "G(m,p,n)" with p | m, writing the group G(de,e,n) with e = p and
// d = m/p, or "Gk" with 4 <= k <= 37. Reducible or degenerate parameters
// are rejected: G(1,1,n), G(2,2,2) and the trivial n = 1, d = 1 case.
inline ReflectionGroupSpec parse_reflection_spec(const std::string& input) {
    std::string s;
    for (char ch : input)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (s.empty() || s[0] != 'G')
        throw input_error("reflection spec: expected G(m,p,n) or Gk, got '" + input + "'");

    ReflectionGroupSpec spec;
    if (s.size() > 1 && s[1] == '(') {
        if (s.back() != ')')
            throw input_error("reflection spec: missing ')' in '" + input + "'");
        std::string body = s.substr(2, s.size() - 3);
        std::vector<long> nums;
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                std::size_t pos = 0;
                nums.push_back(std::stol(tok, &pos));
                if (pos != tok.size())
                    throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw input_error("reflection spec: bad number '" + tok + "'");
            }
        }
        if (nums.size() != 3)
            throw input_error("reflection spec: expected three parameters in '" + input +
                              "'");
        long m = nums[0], p = nums[1], n = nums[2];
        if (m < 1 || p < 1 || n < 1)
            throw input_error("reflection spec: parameters must be positive");
        if (m % p != 0)
            throw input_error("reflection spec: " + std::to_string(p) +
                              " does not divide " + std::to_string(m));
        FamilyParams f{m / p, p, n};
        if (f.d == 1 && f.e == 1)
            throw input_error("reflection spec: G(1,1,n) is not irreducible as written");
        if (f.d == 1 && f.n == 1)
            throw input_error("reflection spec: G(" + std::to_string(m) + "," +
                              std::to_string(p) + ",1) is the trivial group");
        if (f.m() == 2 && f.e == 2 && f.n == 2)
            throw input_error("reflection spec: G(2,2,2) is reducible");
        spec.family = f;
        return spec;
    }

    try {
        std::size_t pos = 0;
        spec.exceptional = std::stoi(s.substr(1), &pos);
        if (pos + 1 != s.size())
            throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw input_error("reflection spec: bad exceptional index in '" + input + "'");
    }
    if (spec.exceptional < 4 || spec.exceptional > 37)
        throw input_error("reflection spec: exceptional index must be 4..37, got " +
                          std::to_string(spec.exceptional));
    return spec;
}

// Reflecting hyperplane of G(de,e,n): either x_i = zeta^a x_j with i < j and
// a mod m, or the coordinate hyperplane x_i = 0 (present only when d > 1).
struct Hyperplane {
    enum Kind { diagonal = 0, cross = 1 };

    int kind = diagonal;
    int i = 0;
    int j = 0;
    long a = 0;

    auto operator<=>(const Hyperplane&) const = default;

    static Hyperplane make_diagonal(int i) { return {diagonal, i, i, 0}; }

    static Hyperplane make_cross(int i, int j, long a, long m) {
        if (i == j)
            throw internal_error("hyperplane: cross needs two coordinates");
        if (i > j) {
            std::swap(i, j);
            a = -a;
        }
        a %= m;
        if (a < 0)
            a += m;
        return {cross, i, j, a};
    }

    std::string str() const {
        if (kind == diagonal)
            return "x" + std::to_string(i + 1) + " = 0";
        return "x" + std::to_string(i + 1) + " = z^" + std::to_string(a) + " x" +
               std::to_string(j + 1);
    }
};

inline void validate_family(const FamilyParams& f) {
    if (f.d < 1 || f.e < 1 || f.n < 1)
        throw input_error("family parameters must be positive");
    if (f.d == 1 && f.e == 1)
        throw input_error("G(1,1,n) is not handled");
}

inline std::vector<Hyperplane> hyperplanes(const FamilyParams& f) {
    validate_family(f);
    std::vector<Hyperplane> hs;
    for (int i = 0; i < f.n; ++i)
        for (int j = i + 1; j < f.n; ++j)
            for (long a = 0; a < f.m(); ++a)
                hs.push_back(Hyperplane::make_cross(i, j, a, f.m()));
    if (f.d > 1)
        for (int i = 0; i < f.n; ++i)
            hs.push_back(Hyperplane::make_diagonal(i));
    std::sort(hs.begin(), hs.end());
    return hs;
}

namespace detail {

// t swaps coordinates p and q with a twist: x_p -> zeta^b x_q, x_q ->
// zeta^{-b} x_p. Substituting into x_i = zeta^a x_j gives, case by case:
// both indices hit -> a becomes 2b - a; i = p -> the pair (q, j) with a - b;
// i = q -> (p, j) with a + b; j = p -> (i, q) with a + b; j = q -> (i, p)
// with a - b. Coordinate hyperplanes just follow the swap.
inline Hyperplane act_cross_reflection(int p, int q, long b, const Hyperplane& h, long m) {
    if (h.kind == Hyperplane::diagonal) {
        int i = h.i == p ? q : (h.i == q ? p : h.i);
        return Hyperplane::make_diagonal(i);
    }
    if (h.i == p && h.j == q)
        return Hyperplane::make_cross(p, q, 2 * b - h.a, m);
    if (h.i == p)
        return Hyperplane::make_cross(q, h.j, h.a - b, m);
    if (h.i == q)
        return Hyperplane::make_cross(p, h.j, h.a + b, m);
    if (h.j == p)
        return Hyperplane::make_cross(h.i, q, h.a + b, m);
    if (h.j == q)
        return Hyperplane::make_cross(h.i, p, h.a - b, m);
    return h;
}

// t scales coordinate p by zeta^shift (shift a nonzero multiple of e): the
// exponent moves by -shift when i = p and by +shift when j = p.
inline Hyperplane act_diag_reflection(int p, long shift, const Hyperplane& h, long m) {
    if (h.kind == Hyperplane::diagonal)
        return h;
    if (h.i == p)
        return Hyperplane::make_cross(h.i, h.j, h.a - shift, m);
    if (h.j == p)
        return Hyperplane::make_cross(h.i, h.j, h.a + shift, m);
    return h;
}

}  // namespace detail

struct HyperplaneOrbits {
    std::vector<std::vector<Hyperplane>> orbits;  // sorted, ordered by least member

    std::size_t count() const { return orbits.size(); }

    std::vector<std::size_t> sizes() const {
        std::vector<std::size_t> s;
        s.reserve(orbits.size());
        for (const auto& o : orbits)
            s.push_back(o.size());
        return s;
    }
};

// Orbits of the reflection action on the hyperplane arrangement, computed by
// closing each hyperplane under every generating reflection of the group.
inline HyperplaneOrbits hyperplane_orbits(const FamilyParams& f) {
    validate_family(f);
    const long m = f.m();
    std::vector<Hyperplane> all = hyperplanes(f);
    std::set<Hyperplane> remaining(all.begin(), all.end());

    auto apply_all = [&](const Hyperplane& h, auto&& visit) {
        for (int p = 0; p < f.n; ++p)
            for (int q = p + 1; q < f.n; ++q)
                for (long b = 0; b < m; ++b)
                    visit(detail::act_cross_reflection(p, q, b, h, m));
        if (f.d > 1)
            for (int p = 0; p < f.n; ++p)
                for (long l = 1; l < f.d; ++l)
                    visit(detail::act_diag_reflection(p, f.e * l, h, m));
    };

    HyperplaneOrbits out;
    for (const Hyperplane& seed : all) {
        if (!remaining.count(seed))
            continue;
        std::vector<Hyperplane> orbit;
        std::queue<Hyperplane> todo;
        remaining.erase(seed);
        orbit.push_back(seed);
        todo.push(seed);
        while (!todo.empty()) {
            Hyperplane cur = todo.front();
            todo.pop();
            apply_all(cur, [&](const Hyperplane& img) {
                if (remaining.erase(img)) {
                    orbit.push_back(img);
                    todo.push(img);
                }
            });
        }
        std::sort(orbit.begin(), orbit.end());
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

struct ExceptionalEntry {
    int index = 0;
    int rank = 0;
    int c = 0;  // number of hyperplane orbits
    std::string provenance;
};

// One record per exceptional group: index, rank, orbit count, provenance.
// Lines starting with '#' are comments.
class ExceptionalTable {
public:
    static ExceptionalTable parse(const std::string& text) {
        ExceptionalTable t;
        std::istringstream is(text);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            std::istringstream ls(line);
            ExceptionalEntry e;
            if (!(ls >> e.index >> e.rank >> e.c >> e.provenance))
                throw input_error("exceptional table: line " + std::to_string(lineno) +
                                  ": expected 'index rank c provenance'");
            std::string extra;
            if (ls >> extra)
                throw input_error("exceptional table: line " + std::to_string(lineno) +
                                  ": trailing field '" + extra + "'");
            if (e.index < 4 || e.index > 37)
                throw input_error("exceptional table: line " + std::to_string(lineno) +
                                  ": index out of range");
            if (e.rank < 1)
                throw input_error("exceptional table: line " + std::to_string(lineno) +
                                  ": bad rank");
            if (e.c < 1 || e.c > 3)
                throw input_error("exceptional table: line " + std::to_string(lineno) +
                                  ": orbit count must be 1..3");
            if (e.c == 3 && e.rank != 2)
                throw input_error("exceptional table: line " + std::to_string(lineno) +
                                  ": three orbits forces rank 2");
            if (!t.entries_.emplace(e.index, e).second)
                throw input_error("exceptional table: line " + std::to_string(lineno) +
                                  ": duplicate index " + std::to_string(e.index));
        }
        return t;
    }

    static const ExceptionalTable& builtin();

    const ExceptionalEntry* find(int index) const {
        auto it = entries_.find(index);
        return it == entries_.end() ? nullptr : &it->second;
    }

    const std::map<int, ExceptionalEntry>& entries() const { return entries_; }

private:
    std::map<int, ExceptionalEntry> entries_;
};

// Shipped copy lives in data/exceptional_groups.tsv; this is the same text,
// so the CLI works without the file and the parser is always exercised.
inline const char* builtin_exceptional_table_text() {
    return R"(# exceptional irreducible complex reflection groups
# index  rank  c(W) = number of reflecting-hyperplane orbits  provenance
4	2	1	literature
5	2	2	literature
6	2	2	literature
7	2	3	classification
8	2	1	literature
9	2	2	literature
10	2	2	literature
11	2	3	classification
12	2	1	classification
13	2	2	literature
14	2	2	literature
15	2	3	classification
16	2	1	literature
17	2	2	literature
18	2	2	literature
19	2	3	classification
20	2	1	literature
21	2	2	literature
22	2	1	classification
23	3	1	literature
24	3	1	literature
25	3	1	literature
26	3	2	literature
27	3	1	literature
28	4	2	literature
29	4	1	literature
30	4	1	literature
31	4	1	literature
32	4	1	literature
33	5	1	literature
34	6	1	literature
35	6	1	literature
36	7	1	literature
37	8	1	literature
)";
}

inline const ExceptionalTable& ExceptionalTable::builtin() {
    static const ExceptionalTable t = parse(builtin_exceptional_table_text());
    return t;
}

struct ClassCount {
    int c = 0;
    std::string provenance;
};

// Closed form for the number of hyperplane orbits. For the family: with
// n >= 3 the cross hyperplanes form one orbit and the coordinate ones
// another (when present); with n = 2 an even e splits the cross hyperplanes
// by parity; n = 1 leaves the single coordinate hyperplane. Exceptional
// groups come from the table.
inline ClassCount c_formula(const ReflectionGroupSpec& spec,
                            const ExceptionalTable& table = ExceptionalTable::builtin()) {
    if (spec.family) {
        const FamilyParams& f = *spec.family;
        validate_family(f);
        int c;
        if (f.n >= 3)
            c = f.d > 1 ? 2 : 1;
        else if (f.n == 2)
            c = f.e % 2 == 0 ? (f.d > 1 ? 3 : 2) : (f.d > 1 ? 2 : 1);
        else
            c = 1;
        return {c, "closed-form"};
    }
    const ExceptionalEntry* e = table.find(spec.exceptional);
    if (!e)
        throw input_error("no classification record for G" +
                          std::to_string(spec.exceptional) +
                          "; refusing to guess");
    return {e->c, e->provenance};
}

inline int reflection_rank(const ReflectionGroupSpec& spec,
                           const ExceptionalTable& table = ExceptionalTable::builtin()) {
    if (spec.family)
        return static_cast<int>(spec.family->n);
    const ExceptionalEntry* e = table.find(spec.exceptional);
    if (!e)
        throw input_error("no classification record for G" +
                          std::to_string(spec.exceptional));
    return e->rank;
}

// Abelianized braid group: free of rank c, one generator per orbit.
inline AbelianGroup braid_ab(const ReflectionGroupSpec& spec,
                             const ExceptionalTable& table = ExceptionalTable::builtin()) {
    AbelianGroup g;
    g.free_rank = static_cast<std::size_t>(c_formula(spec, table).c);
    return g;
}

// Rational form of the braid group, as the right-angled presentation graph
// of its Malcev Lie algebra: a complete graph on c vertices when the braid
// group is rationally abelian, and the star z - f1, z - f2 in the one
// genuinely nonabelian case c = 3, where the completion is Q x (F2 tensor Q).
struct MalcevDescriptor {
    CommutationGraphPtr graph;
    std::string tag;
    int c = 0;
};

inline MalcevDescriptor malcev_descriptor(
    const ReflectionGroupSpec& spec,
    const ExceptionalTable& table = ExceptionalTable::builtin()) {
    MalcevDescriptor out;
    out.c = c_formula(spec, table).c;
    if (out.c == 3) {
        out.graph = make_commutation_graph({"z", "f1", "f2"}, {{0, 1}, {0, 2}});
        out.tag = "Q x (F2 tensor Q)";
        return out;
    }
    std::vector<std::string> verts;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (int i = 0; i < out.c; ++i)
        verts.push_back("x" + std::to_string(i + 1));
    for (int i = 0; i < out.c; ++i)
        for (int j = i + 1; j < out.c; ++j)
            pairs.emplace_back(i, j);
    out.graph = make_commutation_graph(std::move(verts), pairs);
    out.tag = out.c == 1 ? "Q" : "Q^" + std::to_string(out.c);
    return out;
}

}  // namespace malcev
