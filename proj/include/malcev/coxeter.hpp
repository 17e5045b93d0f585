// Coxeter graphs with labels in {2, 3, ...} u {inf}, their Artin
// presentations, the odd-label partition of the vertices, and the
// right-angled quotient graph on its blocks.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "presentation.hpp"

namespace malcev {

// Edge label of a Coxeter graph. 0 is the internal encoding of infinity and
// is accepted on input; serialization always writes "inf".
class CoxLabel {
public:
    CoxLabel() = default;

    static CoxLabel infinity() { return CoxLabel(0); }

    static CoxLabel finite(long m) {
        if (m < 1)
            throw input_error("label must be >= 1 or inf");
        return CoxLabel(m);
    }

    static CoxLabel parse(const std::string& tok) {
        if (tok == "inf")
            return infinity();
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(tok, &pos);
        } catch (const std::exception&) {
            throw input_error("bad label '" + tok + "'");
        }
        if (pos != tok.size() || v < 0)
            throw input_error("bad label '" + tok + "'");
        return v == 0 ? infinity() : finite(v);
    }

    bool infinite() const { return v_ == 0; }

    long value() const {
        if (infinite())
            throw internal_error("value() on infinite label");
        return v_;
    }

    bool odd() const { return !infinite() && v_ % 2 == 1; }

    bool operator==(const CoxLabel&) const = default;

    std::string str() const { return infinite() ? "inf" : std::to_string(v_); }

private:
    explicit CoxLabel(long v) : v_(v) {}
    long v_ = 2;
};

class CoxeterGraph {
public:
    // full symmetric matrix, diagonal 1, off-diagonal >= 2 or inf
    CoxeterGraph(std::vector<std::string> vertices, std::vector<CoxLabel> matrix)
        : vertices_(std::move(vertices)), m_(std::move(matrix)) {
        const std::size_t n = vertices_.size();
        if (n == 0)
            throw input_error("coxeter graph: no vertices");
        if (m_.size() != n * n)
            throw input_error("coxeter graph: matrix size mismatch");
        std::set<std::string> seen;
        for (const std::string& v : vertices_) {
            if (v.empty())
                throw input_error("coxeter graph: empty vertex label");
            if (!seen.insert(v).second)
                throw input_error("coxeter graph: duplicate vertex '" + v + "'");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!(label(i, i) == CoxLabel::finite(1)))
                throw input_error("coxeter graph: diagonal entry must be 1");
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!(label(i, j) == label(j, i)))
                    throw input_error("coxeter graph: matrix not symmetric");
                if (!label(i, j).infinite() && label(i, j).value() < 2)
                    throw input_error("coxeter graph: off-diagonal label < 2");
            }
        }
    }

    // vertices plus the strict upper triangle, row by row
    static CoxeterGraph from_upper(std::vector<std::string> vertices,
                                   const std::vector<CoxLabel>& upper) {
        const std::size_t n = vertices.size();
        if (upper.size() != n * (n - 1) / 2)
            throw input_error("coxeter graph: wrong number of labels");
        std::vector<CoxLabel> m(n * n, CoxLabel::finite(1));
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                m[i * n + j] = upper[k];
                m[j * n + i] = upper[k];
                ++k;
            }
        return CoxeterGraph(std::move(vertices), std::move(m));
    }

    static CoxeterGraph dihedral(const CoxLabel& m) {
        return from_upper({"a0", "a1"}, {m});
    }

    std::size_t size() const { return vertices_.size(); }
    const std::string& vertex(std::size_t i) const { return vertices_[i]; }
    const std::vector<std::string>& vertices() const { return vertices_; }

    const CoxLabel& label(std::size_t i, std::size_t j) const {
        return m_[i * vertices_.size() + j];
    }

    bool operator==(const CoxeterGraph&) const = default;

private:
    std::vector<std::string> vertices_;
    std::vector<CoxLabel> m_;
};

namespace detail {

inline CoxeterGraph parse_coxeter_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("coxeter json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("matrix"))
        throw input_error("coxeter json: need object with 'vertices' and 'matrix'");
    std::vector<std::string> verts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string())
            throw input_error("coxeter json: vertices must be strings");
        verts.push_back(v.get<std::string>());
    }
    const std::size_t n = verts.size();
    if (!j["matrix"].is_array() || j["matrix"].size() != n)
        throw input_error("coxeter json: matrix must have one row per vertex");
    std::vector<CoxLabel> m;
    m.reserve(n * n);
    for (const auto& row : j["matrix"]) {
        if (!row.is_array() || row.size() != n)
            throw input_error("coxeter json: matrix row of wrong length");
        for (const auto& entry : row) {
            if (entry.is_string())
                m.push_back(CoxLabel::parse(entry.get<std::string>()));
            else if (entry.is_number_integer())
                m.push_back(CoxLabel::parse(std::to_string(entry.get<long>())));
            else
                throw input_error("coxeter json: matrix entry must be int or 'inf'");
        }
    }
    return CoxeterGraph(std::move(verts), std::move(m));
}

}  // namespace detail

// Text form: line 1 lists the vertex labels, line 1+i lists the strict upper
// triangle of row i (so n-1-i entries, "inf" or 0 for infinity). A leading
// '{' switches to the JSON form {"vertices": [...], "matrix": [[...]]}.
inline CoxeterGraph parse_coxeter(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw input_error("coxeter: empty input");
    if (text[first] == '{')
        return detail::parse_coxeter_json(text);

    std::istringstream is(text);
    std::string line;
    std::getline(is, line);
    std::vector<std::string> verts = detail::split_ws(line);
    if (verts.empty())
        throw input_error("coxeter: line 1: no vertices");
    const std::size_t n = verts.size();

    std::vector<CoxLabel> upper;
    std::size_t lineno = 1;
    std::size_t row = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::vector<std::string> toks = detail::split_ws(line);
        if (toks.empty())
            continue;
        if (row + 1 >= n && n > 1)
            throw input_error("coxeter: line " + std::to_string(lineno) +
                              ": more rows than expected");
        const std::size_t expect = n - 1 - row;
        if (toks.size() != expect)
            throw input_error("coxeter: line " + std::to_string(lineno) + ": expected " +
                              std::to_string(expect) + " labels, got " +
                              std::to_string(toks.size()));
        for (const std::string& t : toks) {
            try {
                upper.push_back(CoxLabel::parse(t));
            } catch (const input_error& e) {
                throw input_error("coxeter: line " + std::to_string(lineno) + ": " +
                                  e.what());
            }
        }
        ++row;
    }
    if (upper.size() != n * (n - 1) / 2)
        throw input_error("coxeter: expected " + std::to_string(n * (n - 1) / 2) +
                          " labels for the upper triangle, got " +
                          std::to_string(upper.size()));
    for (const CoxLabel& l : upper)
        if (!l.infinite() && l.value() < 2)
            throw input_error("coxeter: off-diagonal label < 2");
    return CoxeterGraph::from_upper(std::move(verts), upper);
}

// One braid relation per finite label m(i,j): the two alternating words of
// length m, the left one starting with the earlier generator, as relator
// left * right^{-1}.
inline ArtinPresentation artin_presentation(const CoxeterGraph& g) {
    ArtinPresentation p;
    p.generators = g.vertices();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const CoxLabel& l = g.label(i, j);
            if (l.infinite())
                continue;
            const long m = l.value();
            Word left, right;
            for (long k = 0; k < m; ++k) {
                left.push_back({k % 2 == 0 ? i : j, 1});
                right.push_back({k % 2 == 0 ? j : i, 1});
            }
            p.relators.push_back(concat(left, inverse(right)));
        }
    return p;
}

// Partition of the vertices into connected components of the graph whose
// edges are the odd finite labels. Any partition with no odd label across
// blocks is refined by this one.
struct OddPartition {
    std::vector<std::vector<std::size_t>> blocks;  // ordered by least member
    std::vector<std::size_t> block_of;             // vertex -> block index
};

inline OddPartition odd_partition(const CoxeterGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> root(n);
    for (std::size_t i = 0; i < n; ++i)
        root[i] = i;
    // union-find without rank; n stays tiny
    auto find = [&](std::size_t x) {
        while (root[x] != x)
            x = root[x] = root[root[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.label(i, j).odd())
                root[std::max(find(i), find(j))] = std::min(find(i), find(j));

    OddPartition p;
    p.block_of.assign(n, 0);
    std::map<std::size_t, std::size_t> index_of_root;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        auto it = index_of_root.find(r);
        if (it == index_of_root.end()) {
            it = index_of_root.emplace(r, p.blocks.size()).first;
            p.blocks.emplace_back();
        }
        p.block_of[i] = it->second;
        p.blocks[it->second].push_back(i);
    }
    return p;
}

// Lexicographically least member label, used to name a block.
inline std::string block_label(const CoxeterGraph& g, const std::vector<std::size_t>& block) {
    std::string best = g.vertex(block.front());
    for (std::size_t v : block)
        best = std::min(best, g.vertex(v));
    return best;
}

// Right-angled graph on the blocks: label 2 when some cross pair carries a
// finite label, inf when every cross pair is infinite. Cross labels are
// never odd, so no information is lost.
inline CoxeterGraph quotient_graph(const CoxeterGraph& g) {
    OddPartition p = odd_partition(g);
    const std::size_t r = p.blocks.size();
    std::vector<std::string> verts;
    verts.reserve(r);
    for (const auto& b : p.blocks)
        verts.push_back(block_label(g, b));
    std::vector<CoxLabel> upper;
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = x + 1; y < r; ++y) {
            bool finite = false;
            for (std::size_t i : p.blocks[x])
                for (std::size_t j : p.blocks[y])
                    if (!g.label(i, j).infinite())
                        finite = true;
            upper.push_back(finite ? CoxLabel::finite(2) : CoxLabel::infinity());
        }
    return CoxeterGraph::from_upper(std::move(verts), upper);
}

inline bool is_free_of_infinity(const CoxeterGraph& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g.label(i, j).infinite())
                return false;
    return true;
}

// Rank of the abelianized Artin group: one Z per block.
inline std::size_t ab_rank(const CoxeterGraph& g) {
    return odd_partition(g).blocks.size();
}

}  // namespace malcev
