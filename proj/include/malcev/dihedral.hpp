// The Artin monoid of even dihedral type and its order resolution in low
// degrees. Two atoms a0 < a1 satisfy (a0 a1)^{e/2} = (a1 a0)^{e/2}; the
// relation preserves length, so each equivalence class of positive words is
// finite and closes under breadth-first rewriting. On top of the monoid ring
// sit the three nontrivial chain groups of the order resolution, the chain
// map onto the abelianized complex, and integral homology of chain
// complexes given by boundary matrices.
#pragma once

#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "integer_matrix.hpp"

namespace malcev {

// positive word in the atoms, letter '0' for a0 and '1' for a1
using MonoidWord = std::string;

namespace detail {

inline void require_even_degree(long e) {
    if (e < 2 || e % 2 != 0)
        throw input_error("dihedral type must be even and >= 2, got " +
                          std::to_string(e));
}

inline MonoidWord alternating(char first, std::size_t len) {
    MonoidWord w;
    w.reserve(len);
    for (std::size_t k = 0; k < len; ++k)
        w.push_back(k % 2 == 0 ? first : (first == '0' ? '1' : '0'));
    return w;
}

}  // namespace detail

// full equivalence class of w under replacing one side of the defining
// relation by the other, anywhere in the word
inline std::set<MonoidWord> word_class(const MonoidWord& w, long e) {
    detail::require_even_degree(e);
    const MonoidWord lhs = detail::alternating('0', e);
    const MonoidWord rhs = detail::alternating('1', e);
    std::set<MonoidWord> seen{w};
    std::queue<MonoidWord> todo;
    todo.push(w);
    while (!todo.empty()) {
        MonoidWord cur = todo.front();
        todo.pop();
        if (cur.size() < static_cast<std::size_t>(e))
            continue;
        for (std::size_t p = 0; p + e <= cur.size(); ++p) {
            const MonoidWord* repl = nullptr;
            if (cur.compare(p, e, lhs) == 0)
                repl = &rhs;
            else if (cur.compare(p, e, rhs) == 0)
                repl = &lhs;
            if (!repl)
                continue;
            MonoidWord next = cur;
            next.replace(p, e, *repl);
            if (seen.insert(next).second)
                todo.push(next);
        }
    }
    return seen;
}

inline bool word_equiv(const MonoidWord& u, const MonoidWord& v, long e) {
    detail::require_even_degree(e);
    if (u.size() != v.size())
        return false;
    return word_class(u, e).count(v) > 0;
}

// shortlex-least member of the class; the relation preserves length, so this
// is just the lexicographic minimum
inline MonoidWord canonical_word(const MonoidWord& w, long e) {
    return *word_class(w, e).begin();
}

// Element of the monoid ring Z[M], keys kept canonical.
class GroupRingElement {
public:
    explicit GroupRingElement(long e) : e_(e) { detail::require_even_degree(e); }

    GroupRingElement(long e, const MonoidWord& w, Integer coeff = 1)
        : GroupRingElement(e) {
        add(w, coeff);
    }

    long degree() const { return e_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<MonoidWord, Integer>& terms() const { return terms_; }

    void add(const MonoidWord& w, const Integer& coeff) {
        if (coeff == 0)
            return;
        MonoidWord key = canonical_word(w, e_);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), coeff);
        } else {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    GroupRingElement& operator+=(const GroupRingElement& rhs) {
        check_mixed(rhs);
        for (const auto& [w, c] : rhs.terms_)
            add(w, c);
        return *this;
    }

    GroupRingElement& operator-=(const GroupRingElement& rhs) {
        check_mixed(rhs);
        for (const auto& [w, c] : rhs.terms_)
            add(w, -c);
        return *this;
    }

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
        a += b;
        return a;
    }

    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
        a -= b;
        return a;
    }

    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        a.check_mixed(b);
        GroupRingElement out(a.e_);
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_)
                out.add(u + v, cu * cv);
        return out;
    }

    friend GroupRingElement operator*(const Integer& s, const GroupRingElement& a) {
        GroupRingElement out(a.e_);
        for (const auto& [w, c] : a.terms_)
            out.add(w, s * c);
        return out;
    }

    bool operator==(const GroupRingElement&) const = default;

    // augmentation: every monoid element to 1
    Integer epsilon() const {
        Integer s = 0;
        for (const auto& [w, c] : terms_)
            s += c;
        return s;
    }

private:
    void check_mixed(const GroupRingElement& rhs) const {
        if (e_ != rhs.e_)
            throw internal_error("monoid ring: mixed dihedral types");
    }

    long e_;
    std::map<MonoidWord, Integer> terms_;
};

// Element of Z[t0^{+-1}, t1^{+-1}], the abelianized monoid ring.
class LaurentElement {
public:
    LaurentElement() = default;

    static LaurentElement monomial(long k0, long k1, Integer coeff = 1) {
        LaurentElement x;
        x.add(k0, k1, coeff);
        return x;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<long, long>, Integer>& terms() const { return terms_; }

    void add(long k0, long k1, const Integer& coeff) {
        if (coeff == 0)
            return;
        auto key = std::make_pair(k0, k1);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    LaurentElement& operator+=(const LaurentElement& rhs) {
        for (const auto& [k, c] : rhs.terms_)
            add(k.first, k.second, c);
        return *this;
    }

    LaurentElement& operator-=(const LaurentElement& rhs) {
        for (const auto& [k, c] : rhs.terms_)
            add(k.first, k.second, -c);
        return *this;
    }

    friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) {
        a += b;
        return a;
    }

    friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) {
        a -= b;
        return a;
    }

    friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
        LaurentElement out;
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_)
                out.add(u.first + v.first, u.second + v.second, cu * cv);
        return out;
    }

    bool operator==(const LaurentElement&) const = default;

    Integer epsilon() const {
        Integer s = 0;
        for (const auto& [k, c] : terms_)
            s += c;
        return s;
    }

private:
    std::map<std::pair<long, long>, Integer> terms_;
};

// letter counts of a positive word, as a Laurent monomial exponent
inline LaurentElement abelianize(const GroupRingElement& x) {
    LaurentElement out;
    for (const auto& [w, c] : x.terms()) {
        long k0 = 0, k1 = 0;
        for (char ch : w)
            (ch == '0' ? k0 : k1)++;
        out.add(k0, k1, c);
    }
    return out;
}

// Boundary coefficients of the order resolution in degrees <= 2. Cells are
// [the empty chain], [a0], [a1] and [a0, a1]; d1 and d2 are recorded through
// their monoid ring coefficients on the cells one dimension down.
struct DihedralComplex {
    long e;
    GroupRingElement d1_a0;  // coefficient of [] in d1([a0])
    GroupRingElement d1_a1;  // coefficient of [] in d1([a1])
    GroupRingElement d2_a0;  // coefficient of [a0] in d2([a0, a1])
    GroupRingElement d2_a1;  // coefficient of [a1] in d2([a0, a1])
};

// d1([a_i]) = (a_i - 1) [].
//
// d2([a0, a1]) pairs the two length-(e-1) alternating words against the
// proper prefixes of both: the word starting with a0 lands on [a1] and the
// one starting with a1 lands on [a0], each with sign +1, while a prefix of
// length l starting with a1 contributes -1 on [a1] for l even and on [a0]
// for l odd, and a prefix starting with a0 contributes +1 on [a0] for l even
// and on [a1] for l odd.
inline DihedralComplex dihedral_complex(long e) {
    detail::require_even_degree(e);
    DihedralComplex cx{e, GroupRingElement(e), GroupRingElement(e),
                       GroupRingElement(e), GroupRingElement(e)};

    cx.d1_a0.add(MonoidWord("0"), 1);
    cx.d1_a0.add(MonoidWord(), -1);
    cx.d1_a1.add(MonoidWord("1"), 1);
    cx.d1_a1.add(MonoidWord(), -1);

    cx.d2_a1.add(detail::alternating('0', e - 1), 1);
    cx.d2_a0.add(detail::alternating('1', e - 1), -1);
    for (long l = 0; l <= e - 2; ++l) {
        if (l % 2 == 0) {
            cx.d2_a1.add(detail::alternating('1', l), -1);
            cx.d2_a0.add(detail::alternating('0', l), 1);
        } else {
            cx.d2_a0.add(detail::alternating('1', l), -1);
            cx.d2_a1.add(detail::alternating('0', l), 1);
        }
    }
    return cx;
}

// f2([a0, a1]) = x [a0, a1] with x the sum below; f0 and f1 are the identity
// on cells. x abelianizes to (e/2) under augmentation.
inline LaurentElement chain_map_x(long e) {
    detail::require_even_degree(e);
    LaurentElement x;
    for (long k = 0; k <= (e - 2) / 2; ++k)
        x.add(k, k, 1);
    return x;
}

// d1 . d2 = 0 in the monoid ring, and the chain square f1 . d2 = d2^{ab} . x
// commutes after abelianizing.
inline bool verify_chain_identities(long e) {
    DihedralComplex cx = dihedral_complex(e);

    GroupRingElement composite =
        cx.d2_a0 * cx.d1_a0 + cx.d2_a1 * cx.d1_a1;
    if (!composite.is_zero())
        return false;

    LaurentElement x = chain_map_x(e);
    LaurentElement t0 = LaurentElement::monomial(1, 0);
    LaurentElement t1 = LaurentElement::monomial(0, 1);
    LaurentElement one = LaurentElement::monomial(0, 0);
    // the abelianized square has d2 coefficients 1 - t1 on [a0], t0 - 1 on [a1]
    if (!(abelianize(cx.d2_a0) == x * (one - t1)))
        return false;
    if (!(abelianize(cx.d2_a1) == x * (t0 - one)))
        return false;
    return true;
}

// boundary matrices over Z after augmentation, d1 then d2
inline std::vector<IntegerMatrix> augmented_complex(long e) {
    DihedralComplex cx = dihedral_complex(e);
    IntegerMatrix d1(1, 2), d2(2, 1);
    d1(0, 0) = cx.d1_a0.epsilon();
    d1(0, 1) = cx.d1_a1.epsilon();
    d2(0, 0) = cx.d2_a0.epsilon();
    d2(1, 0) = cx.d2_a1.epsilon();
    return {d1, d2};
}

// Homology of a complex C_n -> ... -> C_1 -> C_0 presented by its boundary
// matrices [d1, ..., dn]; returns H_0 through H_n.
inline std::vector<AbelianGroup> homology(const std::vector<IntegerMatrix>& boundary) {
    if (boundary.empty())
        throw input_error("homology: need at least one boundary matrix");
    for (std::size_t k = 0; k + 1 < boundary.size(); ++k) {
        if (boundary[k].cols() != boundary[k + 1].rows())
            throw input_error("homology: boundary matrices do not compose");
        if (!(boundary[k] * boundary[k + 1]).is_zero())
            throw input_error("homology: composite boundary is nonzero");
    }
    std::vector<AbelianGroup> h;
    h.push_back(cokernel(boundary[0]));
    for (std::size_t k = 1; k < boundary.size(); ++k) {
        IntegerMatrix ker = kernel_basis(boundary[k - 1]);
        // rewrite the incoming image in kernel coordinates; always solvable
        // because the composite vanishes and the kernel basis is unimodular
        IntegerMatrix x = solve_exact(ker, boundary[k]);
        IntegerMatrix inside(ker.cols(), x.cols());
        for (std::size_t i = 0; i < inside.rows(); ++i)
            for (std::size_t j = 0; j < inside.cols(); ++j)
                inside(i, j) = x(i, j);
        h.push_back(cokernel(inside));
    }
    const IntegerMatrix& last = boundary.back();
    AbelianGroup top;
    top.free_rank = kernel_basis(last).cols();
    h.push_back(top);
    return h;
}

// The chain map in top degree, written on the kernels of the augmented d2
// for type e upstairs and type 2 downstairs; the matrix is 1 x 1.
inline IntegerMatrix induced_h2_map(long e) {
    detail::require_even_degree(e);
    IntegerMatrix src = kernel_basis(augmented_complex(e)[1]);
    IntegerMatrix dst = kernel_basis(augmented_complex(2)[1]);
    IntegerMatrix f2(1, 1);
    f2(0, 0) = chain_map_x(e).epsilon();
    return solve_exact(dst, f2 * src);
}

// The degree-1 comparison map is the identity on cells; check that it stays
// an isomorphism on homology.
inline bool induced_h1_iso(long e) {
    detail::require_even_degree(e);
    IntegerMatrix src = kernel_basis(augmented_complex(e)[0]);
    IntegerMatrix dst = kernel_basis(augmented_complex(2)[0]);
    if (src.cols() != dst.cols())
        return false;
    IntegerMatrix map = solve_exact(dst, src);
    return cokernel(map).trivial() && kernel_basis(map).cols() == 0;
}

// Bottom of the five-term exact sequence: with H1 mapped isomorphically, the
// second graded piece of the lower central series is the cokernel of the
// induced H2 map.
inline AbelianGroup five_term_gr2(const IntegerMatrix& h2_map, bool h1_iso) {
    if (!h1_iso)
        throw input_error("five_term_gr2: H1 comparison is not an isomorphism");
    return cokernel(h2_map);
}

inline AbelianGroup dihedral_gr2(long e) {
    return five_term_gr2(induced_h2_map(e), induced_h1_iso(e));
}

}  // namespace malcev
