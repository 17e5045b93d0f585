// Exact truncated power series over a trace monoid: a commutation graph
// says which generators commute, monomials are canonical (lexicographically
// least) trace representatives, coefficients are rationals, and everything
// is cut off above a fixed total degree. On top sit exp, log, the runs
// coproduct, grouplike/primitive predicates, the BCH bracket, clique and
// Hilbert series bookkeeping, and the graded Lie dimension count.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "integer_matrix.hpp"

namespace malcev {

class CommutationGraph {
public:
    CommutationGraph(std::vector<std::string> vertices,
                     const std::vector<std::pair<std::size_t, std::size_t>>& commuting)
        : vertices_(std::move(vertices)) {
        const std::size_t n = vertices_.size();
        if (n == 0)
            throw input_error("commutation graph: no vertices");
        if (n > 64)
            throw input_error("commutation graph: more than 64 vertices");
        std::set<std::string> seen;
        for (const std::string& v : vertices_)
            if (v.empty() || !seen.insert(v).second)
                throw input_error("commutation graph: bad or duplicate vertex label");
        // start fully non-commuting (self included), then clear listed pairs
        std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
        noncommute_.assign(n, all);
        for (auto [i, j] : commuting) {
            if (i >= n || j >= n || i == j)
                throw input_error("commutation graph: bad commuting pair");
            noncommute_[i] &= ~(1ull << j);
            noncommute_[j] &= ~(1ull << i);
        }
    }

    std::size_t size() const { return vertices_.size(); }
    const std::string& label(std::size_t i) const { return vertices_[i]; }
    const std::vector<std::string>& vertices() const { return vertices_; }

    bool commutes(std::size_t i, std::size_t j) const {
        return i != j && !(noncommute_[i] >> j & 1);
    }

    std::uint64_t noncommute_mask(std::size_t i) const { return noncommute_[i]; }

    bool operator==(const CommutationGraph&) const = default;

private:
    std::vector<std::string> vertices_;
    std::vector<std::uint64_t> noncommute_;
};

using CommutationGraphPtr = std::shared_ptr<const CommutationGraph>;

inline CommutationGraphPtr make_commutation_graph(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::size_t, std::size_t>>& commuting) {
    return std::make_shared<const CommutationGraph>(std::move(vertices), commuting);
}

// Trace words are byte strings of vertex indices. The canonical form is the
// lexicographically least representative, found by repeatedly extracting the
// least letter whose whole prefix commutes with it. Two occurrences of one
// letter never compete: a letter does not commute past itself.
inline std::string trace_normal_form(const std::string& w, const CommutationGraph& g) {
    for (unsigned char ch : w)
        if (ch >= g.size())
            throw internal_error("trace: letter out of range");
    std::string buf = w;
    std::string out;
    out.reserve(w.size());
    while (!buf.empty()) {
        std::uint64_t blocked = 0;
        std::size_t best = buf.size();
        for (std::size_t p = 0; p < buf.size(); ++p) {
            unsigned char v = static_cast<unsigned char>(buf[p]);
            if (!(blocked >> v & 1) && (best == buf.size() || buf[p] < buf[best]))
                best = p;
            blocked |= g.noncommute_mask(v);
        }
        out.push_back(buf[best]);
        buf.erase(buf.begin() + best);
    }
    return out;
}

// closure under swapping adjacent commuting letters; reference oracle for
// the extraction algorithm and deliberately naive
inline std::set<std::string> trace_class(const std::string& w, const CommutationGraph& g) {
    std::set<std::string> seen{w};
    std::queue<std::string> todo;
    todo.push(w);
    while (!todo.empty()) {
        std::string cur = todo.front();
        todo.pop();
        for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
            if (!g.commutes(static_cast<unsigned char>(cur[p]),
                            static_cast<unsigned char>(cur[p + 1])))
                continue;
            std::string next = cur;
            std::swap(next[p], next[p + 1]);
            if (seen.insert(next).second)
                todo.push(next);
        }
    }
    return seen;
}

struct GradedLex {
    bool operator()(const std::string& a, const std::string& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

class TruncatedSeries {
public:
    TruncatedSeries(CommutationGraphPtr graph, int degree)
        : graph_(std::move(graph)), degree_(degree) {
        if (!graph_)
            throw internal_error("series: null graph");
        if (degree_ < 0)
            throw input_error("series: negative truncation degree");
    }

    static TruncatedSeries zero(CommutationGraphPtr g, int degree) {
        return TruncatedSeries(std::move(g), degree);
    }

    static TruncatedSeries constant(CommutationGraphPtr g, int degree, const Rational& c) {
        TruncatedSeries s(std::move(g), degree);
        s.add_term("", c);
        return s;
    }

    static TruncatedSeries one(CommutationGraphPtr g, int degree) {
        return constant(std::move(g), degree, 1);
    }

    static TruncatedSeries generator(CommutationGraphPtr g, int degree, std::size_t i) {
        if (i >= g->size())
            throw internal_error("series: generator index out of range");
        TruncatedSeries s(std::move(g), degree);
        s.add_term(std::string(1, static_cast<char>(i)), 1);
        return s;
    }

    const CommutationGraph& graph() const { return *graph_; }
    const CommutationGraphPtr& graph_ptr() const { return graph_; }
    int degree() const { return degree_; }
    const std::map<std::string, Rational, GradedLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const std::string& w) const {
        auto it = terms_.find(trace_normal_form(w, *graph_));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const std::string& w, const Rational& c) {
        if (c == 0 || w.size() > static_cast<std::size_t>(degree_))
            return;
        std::string key = trace_normal_form(w, *graph_);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
        check_compatible(rhs);
        for (const auto& [w, c] : rhs.terms_)
            add_term(w, c);
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& rhs) {
        check_compatible(rhs);
        for (const auto& [w, c] : rhs.terms_)
            add_term(w, -c);
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        a += b;
        return a;
    }

    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        a -= b;
        return a;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries out(graph_, degree_);
        for (const auto& [w, c] : terms_)
            out.terms_.emplace(w, -c);
        return out;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_compatible(b);
        TruncatedSeries out(a.graph_, a.degree_);
        for (const auto& [u, cu] : a.terms_) {
            for (const auto& [v, cv] : b.terms_) {
                // terms are graded; once v is too long every later v is too
                if (u.size() + v.size() > static_cast<std::size_t>(a.degree_))
                    break;
                out.add_term(u + v, cu * cv);
            }
        }
        return out;
    }

    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
        TruncatedSeries out(a.graph_, a.degree_);
        if (s == 0)
            return out;
        for (const auto& [w, c] : a.terms_)
            out.terms_.emplace(w, s * c);
        return out;
    }

    friend TruncatedSeries operator/(const TruncatedSeries& a, const Rational& s) {
        if (s == 0)
            throw input_error("series: division by zero scalar");
        return Rational(denominator(s), numerator(s)) * a;
    }

    bool operator==(const TruncatedSeries& rhs) const {
        return degree_ == rhs.degree_ && *graph_ == *rhs.graph_ && terms_ == rhs.terms_;
    }

private:
    void check_compatible(const TruncatedSeries& rhs) const {
        if (degree_ != rhs.degree_)
            throw internal_error("series: truncation degree mismatch");
        if (!(*graph_ == *rhs.graph_))
            throw internal_error("series: commutation graph mismatch");
    }

    CommutationGraphPtr graph_;
    int degree_;
    std::map<std::string, Rational, GradedLex> terms_;
};

struct PairGradedLex {
    bool operator()(const std::pair<std::string, std::string>& a,
                    const std::pair<std::string, std::string>& b) const {
        std::size_t da = a.first.size() + a.second.size();
        std::size_t db = b.first.size() + b.second.size();
        if (da != db)
            return da < db;
        GradedLex lex;
        if (a.first != b.first)
            return lex(a.first, b.first);
        return lex(a.second, b.second);
    }
};

// Element of the truncated tensor square, with both tensor legs canonical
// and the total degree cut off at the same bound.
class TensorSeries {
public:
    TensorSeries(CommutationGraphPtr graph, int degree)
        : graph_(std::move(graph)), degree_(degree) {}

    const std::map<std::pair<std::string, std::string>, Rational, PairGradedLex>& terms() const {
        return terms_;
    }

    void add_term(const std::string& u, const std::string& v, const Rational& c) {
        if (c == 0 || u.size() + v.size() > static_cast<std::size_t>(degree_))
            return;
        auto key = std::make_pair(trace_normal_form(u, *graph_),
                                  trace_normal_form(v, *graph_));
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    TensorSeries& operator+=(const TensorSeries& rhs) {
        for (const auto& [k, c] : rhs.terms_)
            add_term(k.first, k.second, c);
        return *this;
    }

    bool operator==(const TensorSeries& rhs) const {
        return degree_ == rhs.degree_ && *graph_ == *rhs.graph_ && terms_ == rhs.terms_;
    }

private:
    CommutationGraphPtr graph_;
    int degree_;
    std::map<std::pair<std::string, std::string>, Rational, PairGradedLex> terms_;
};

inline TruncatedSeries exp(const TruncatedSeries& u) {
    if (u.coefficient("") != 0)
        throw input_error("exp: series has nonzero constant term");
    TruncatedSeries r = TruncatedSeries::one(u.graph_ptr(), u.degree());
    TruncatedSeries inc = r;
    for (int k = 1; k <= u.degree() && !inc.is_zero(); ++k) {
        inc = inc * u / Rational(k);
        r += inc;
    }
    return r;
}

inline TruncatedSeries log(const TruncatedSeries& g) {
    if (g.coefficient("") != 1)
        throw input_error("log: series must have constant term 1");
    TruncatedSeries v = g - TruncatedSeries::one(g.graph_ptr(), g.degree());
    TruncatedSeries r = TruncatedSeries::zero(g.graph_ptr(), g.degree());
    TruncatedSeries p = TruncatedSeries::one(g.graph_ptr(), g.degree());
    for (int k = 1; k <= g.degree() && !p.is_zero(); ++k) {
        p = p * v;
        r += (k % 2 == 1 ? Rational(1, k) : Rational(-1, k)) * p;
    }
    return r;
}

// The generators are sent to x (x) 1 + 1 (x) x; on a monomial this splits
// the letter positions over the two legs in all order-preserving ways.
inline TensorSeries coproduct(const TruncatedSeries& a) {
    TensorSeries out(a.graph_ptr(), a.degree());
    for (const auto& [w, c] : a.terms()) {
        const std::size_t n = w.size();
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            std::string left, right;
            for (std::size_t p = 0; p < n; ++p)
                (mask >> p & 1 ? left : right).push_back(w[p]);
            out.add_term(left, right, c);
        }
    }
    return out;
}

inline TensorSeries tensor_product(const TruncatedSeries& a, const TruncatedSeries& b) {
    TensorSeries out(a.graph_ptr(), a.degree());
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms())
            out.add_term(u, v, cu * cv);
    return out;
}

inline bool is_grouplike(const TruncatedSeries& g) {
    if (g.coefficient("") != 1)
        return false;
    return coproduct(g) == tensor_product(g, g);
}

inline bool is_primitive(const TruncatedSeries& u) {
    TensorSeries expected(u.graph_ptr(), u.degree());
    for (const auto& [w, c] : u.terms()) {
        expected.add_term(w, "", c);
        expected.add_term("", w, c);
    }
    return coproduct(u) == expected;
}

inline TruncatedSeries bracket(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a * b - b * a;
}

inline TruncatedSeries bch(const TruncatedSeries& u, const TruncatedSeries& v) {
    if (!is_primitive(u) || !is_primitive(v))
        throw input_error("bch: arguments must be primitive");
    return log(exp(u) * exp(v));
}

// signed clique count: coefficient k is (-1)^k times the number of
// k-cliques, giving the reciprocal of the trace growth series
inline std::vector<Integer> clique_polynomial(const CommutationGraph& g) {
    std::vector<Integer> p(g.size() + 1);
    p[0] = 1;
    std::vector<std::size_t> cur;
    auto extend = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t v = from; v < g.size(); ++v) {
            bool ok = true;
            for (std::size_t u : cur)
                if (!g.commutes(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            cur.push_back(v);
            p[cur.size()] += (cur.size() % 2 == 0 ? 1 : -1);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    extend(extend, 0);
    return p;
}

// trace counts by length, through the clique polynomial inverse
inline std::vector<Integer> hilbert_series(const CommutationGraph& g, int degree) {
    if (degree < 0)
        throw input_error("hilbert_series: negative degree");
    std::vector<Integer> p = clique_polynomial(g);
    std::vector<Integer> h(degree + 1);
    h[0] = 1;
    for (int n = 1; n <= degree; ++n) {
        Integer s = 0;
        for (std::size_t k = 1; k < p.size() && k <= static_cast<std::size_t>(n); ++k)
            s += p[k] * h[n - k];
        h[n] = -s;
    }
    return h;
}

// direct enumeration of canonical traces; canonical words are closed under
// taking prefixes, so extension by one letter finds them all
inline Integer count_traces_bfs(const CommutationGraph& g, int length) {
    if (length < 0)
        throw input_error("count_traces_bfs: negative length");
    std::vector<std::string> level{""};
    for (int l = 1; l <= length; ++l) {
        std::vector<std::string> next;
        for (const std::string& w : level)
            for (std::size_t v = 0; v < g.size(); ++v) {
                std::string w2 = w + static_cast<char>(v);
                if (trace_normal_form(w2, g) == w2)
                    next.push_back(std::move(w2));
            }
        level = std::move(next);
    }
    return Integer(level.size());
}

namespace detail {

// multiply truncated coefficient vectors
inline std::vector<Integer> series_mul(const std::vector<Integer>& a,
                                       const std::vector<Integer>& b, int degree) {
    std::vector<Integer> out(degree + 1);
    for (int i = 0; i <= degree; ++i) {
        if (static_cast<std::size_t>(i) >= a.size() || a[i] == 0)
            continue;
        for (int j = 0; i + j <= degree; ++j)
            if (static_cast<std::size_t>(j) < b.size() && b[j] != 0)
                out[i + j] += a[i] * b[j];
    }
    return out;
}

// (1 - t^step)^{+-d} truncated, by the binomial series
inline std::vector<Integer> one_minus_power(int step, const Integer& d, bool inverse,
                                            int degree) {
    std::vector<Integer> s(degree + 1);
    s[0] = 1;
    Integer coeff = 1;
    for (int j = 1; j * step <= degree; ++j) {
        if (inverse) {
            coeff = coeff * (d + j - 1) / j;  // C(d+j-1, j)
            s[j * step] = coeff;
        } else {
            if (j > d) {
                break;
            }
            coeff = coeff * (d - j + 1) / j;  // C(d, j)
            s[j * step] = (j % 2 == 0 ? coeff : -coeff);
        }
    }
    return s;
}

}  // namespace detail

// Dimensions d_1..d_degree of the graded Lie algebra whose universal
// envelope has the trace monoid Hilbert series: peel the clique polynomial
// factor by factor through prod (1 - t^n)^{d_n} = p(t). A negative d_n
// would mean the envelope bookkeeping broke down.
inline std::vector<Integer> lie_dimensions(const CommutationGraph& g, int degree) {
    if (degree < 0)
        throw input_error("lie_dimensions: negative degree");
    std::vector<Integer> residual(degree + 1);
    {
        std::vector<Integer> p = clique_polynomial(g);
        for (std::size_t k = 0; k < p.size() && k <= static_cast<std::size_t>(degree); ++k)
            residual[k] = p[k];
    }
    std::vector<Integer> dims;
    for (int n = 1; n <= degree; ++n) {
        Integer dn = -residual[n];
        if (dn < 0)
            throw internal_error("lie_dimensions: negative dimension at degree " +
                                 std::to_string(n));
        dims.push_back(dn);
        if (dn != 0)
            residual = detail::series_mul(
                residual, detail::one_minus_power(n, dn, true, degree), degree);
    }
    return dims;
}

// prod (1 - t^n)^{d_n} truncated; composing with lie_dimensions must give
// back the clique polynomial
inline std::vector<Integer> witt_product(const std::vector<Integer>& dims, int degree) {
    std::vector<Integer> out(degree + 1);
    out[0] = 1;
    for (std::size_t n = 1; n <= dims.size() && static_cast<int>(n) <= degree; ++n)
        if (dims[n - 1] != 0)
            out = detail::series_mul(
                out, detail::one_minus_power(static_cast<int>(n), dims[n - 1], false, degree),
                degree);
    return out;
}

// commutation graph of a right-angled Coxeter/Artin diagram: label 2 means
// the generators commute, inf means no relation; anything else is rejected
inline CommutationGraphPtr raag_commutation_graph(const CoxeterGraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> commuting;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const CoxLabel& l = g.label(i, j);
            if (l.infinite())
                continue;
            if (l.value() != 2)
                throw input_error("graph is not right-angled: label " + l.str() +
                                  " between '" + g.vertex(i) + "' and '" + g.vertex(j) +
                                  "'");
            commuting.emplace_back(i, j);
        }
    return make_commutation_graph(g.vertices(), commuting);
}

inline CommutationGraphPtr quotient_commutation_graph(const CoxeterGraph& g) {
    return raag_commutation_graph(quotient_graph(g));
}

// Image of an Artin group element under s |-> exp(x_B) for s in block B,
// inside the truncated envelope of the quotient commutation graph.
inline TruncatedSeries phi_image(const Word& w, const CoxeterGraph& g, int degree) {
    OddPartition part = odd_partition(g);
    CommutationGraphPtr cg = quotient_commutation_graph(g);
    std::map<std::pair<std::size_t, int>, TruncatedSeries> cache;
    TruncatedSeries r = TruncatedSeries::one(cg, degree);
    for (const Letter& l : w) {
        if (l.gen >= g.size())
            throw internal_error("phi_image: letter out of range");
        auto key = std::make_pair(part.block_of[l.gen], l.sign);
        auto it = cache.find(key);
        if (it == cache.end()) {
            TruncatedSeries x = TruncatedSeries::generator(cg, degree, key.first);
            if (l.sign < 0)
                x = -x;
            it = cache.emplace(key, exp(x)).first;
        }
        r = r * it->second;
    }
    return r;
}

}  // namespace malcev
