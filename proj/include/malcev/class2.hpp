// Free class-2 nilpotent groups by collection, and the first two graded
// pieces of the lower central series of a finitely presented group.
//
// An element is written in collected form prod s_i^{a_i} * prod c_ij^{e_ij}
// with c_ij = (s_i, s_j) = s_i s_j s_i^{-1} s_j^{-1} central, pairs i < j in
// lexicographic order. Multiplication collects the right factor's generators
// to the left past the left factor's, so under the standard convention
// evaluating the word s t s' t' yields exactly +c_st.
#pragma once

#include <cstddef>
#include <vector>

#include "presentation.hpp"

namespace malcev {

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// position of the pair (i, j), i < j, in lexicographic order
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
    if (i >= j || j >= n)
        throw internal_error("pair_index: need i < j < n");
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// The mirrored convention collects in the opposite direction and flips the
// sign of every commutator correction; gr2 must not depend on the choice.
enum class Collection { standard, mirrored };

struct Class2Element {
    std::vector<Integer> a;  // generator exponents
    std::vector<Integer> c;  // central exponents, pair order (0,1), (0,2), ...

    static Class2Element identity(std::size_t n) {
        return {std::vector<Integer>(n), std::vector<Integer>(pair_count(n))};
    }

    std::size_t generator_count() const { return a.size(); }

    bool is_identity() const {
        for (const Integer& x : a)
            if (x != 0)
                return false;
        for (const Integer& x : c)
            if (x != 0)
                return false;
        return true;
    }

    bool operator==(const Class2Element&) const = default;
};

namespace detail {

inline int collection_sign(Collection conv) {
    return conv == Collection::standard ? -1 : 1;
}

// q(a)_ij = a_i a_j, the correction showing up in inverses and powers
inline std::vector<Integer> pair_square(const std::vector<Integer>& a) {
    const std::size_t n = a.size();
    std::vector<Integer> q(pair_count(n));
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            q[k++] = a[i] * a[j];
    return q;
}

}  // namespace detail

inline Class2Element class2_multiply(const Class2Element& x, const Class2Element& y,
                                     Collection conv = Collection::standard) {
    const std::size_t n = x.generator_count();
    if (y.generator_count() != n)
        throw internal_error("class2_multiply: rank mismatch");
    Class2Element z = Class2Element::identity(n);
    const int sgn = detail::collection_sign(conv);
    for (std::size_t i = 0; i < n; ++i)
        z.a[i] = x.a[i] + y.a[i];
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            z.c[k] = x.c[k] + y.c[k] + sgn * x.a[j] * y.a[i];
            ++k;
        }
    return z;
}

inline Class2Element class2_power(const Class2Element& x, const Integer& m,
                                  Collection conv = Collection::standard) {
    Class2Element z = Class2Element::identity(x.generator_count());
    const int sgn = detail::collection_sign(conv);
    std::vector<Integer> q = detail::pair_square(x.a);
    const Integer binom = m * (m - 1) / 2;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        z.a[i] = m * x.a[i];
    for (std::size_t k = 0; k < x.c.size(); ++k)
        z.c[k] = m * x.c[k] + sgn * binom * q[k];
    return z;
}

inline Class2Element class2_inverse(const Class2Element& x,
                                    Collection conv = Collection::standard) {
    return class2_power(x, -1, conv);
}

inline Class2Element class2_generator(std::size_t g, int sign, std::size_t n) {
    Class2Element z = Class2Element::identity(n);
    z.a[g] = sign;
    return z;
}

inline Class2Element evaluate_word_class2(const Word& w, std::size_t n,
                                          Collection conv = Collection::standard) {
    Class2Element z = Class2Element::identity(n);
    for (const Letter& l : w)
        z = class2_multiply(z, class2_generator(l.gen, l.sign, n), conv);
    return z;
}

// central exponents of the commutator of elements with exponent rows u, w
inline std::vector<Integer> pair_bracket(const std::vector<Integer>& u,
                                         const std::vector<Integer>& w) {
    const std::size_t n = u.size();
    std::vector<Integer> b(pair_count(n));
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            b[k++] = u[i] * w[j] - u[j] * w[i];
        }
    return b;
}

struct NilpotentQuotients {
    AbelianGroup gr1;  // G / (G,G)
    AbelianGroup gr2;  // (G,G) / ((G,G),G) for class-2 purposes
};

// Both graded pieces of the lower central series of the presented group.
//
// gr1 is the cokernel of the exponent matrix. For gr2, the free c-lattice is
// cut down by (i) brackets of each relator row with each generator, which
// absorb conjugation, and (ii) the central parts of the products prod r_k^x
// over a kernel basis x of the exponent matrix, which are the relations the
// relators impose inside the commutator subgroup.
inline NilpotentQuotients gr2(const GroupPresentation& p,
                              Collection conv = Collection::standard) {
    p.validate();
    const std::size_t n = p.generator_count();
    const std::size_t m = p.relators.size();

    std::vector<Class2Element> v;
    v.reserve(m);
    for (const Word& r : p.relators)
        v.push_back(evaluate_word_class2(r, n, conv));

    IntegerMatrix expo(n, m);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < n; ++i)
            expo(i, k) = v[k].a[i];

    NilpotentQuotients out;
    out.gr1 = cokernel(expo);

    const std::size_t pc = pair_count(n);
    std::vector<std::vector<Integer>> cols;
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<Integer> e(n);
        for (std::size_t g = 0; g < n; ++g) {
            e.assign(n, 0);
            e[g] = 1;
            cols.push_back(pair_bracket(v[k].a, e));
        }
    }
    IntegerMatrix ker = kernel_basis(expo);
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        Class2Element prod = Class2Element::identity(n);
        for (std::size_t k = 0; k < m; ++k)
            prod = class2_multiply(prod, class2_power(v[k], ker(k, j), conv), conv);
        if (!std::all_of(prod.a.begin(), prod.a.end(),
                         [](const Integer& x) { return x == 0; }))
            throw internal_error("gr2: kernel product has nonzero exponent row");
        cols.push_back(prod.c);
    }

    IntegerMatrix lattice(pc, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < pc; ++i)
            lattice(i, j) = cols[j][i];
    out.gr2 = cokernel(lattice);
    return out;
}

}  // namespace malcev
