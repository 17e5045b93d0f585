// Structured JSON reports behind the CLI subcommands. Every value that can
// exceed 64 bits is serialized as a decimal string; object keys come out
// sorted, so a report is byte-identical across runs of the same input.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "class2.hpp"
#include "coxeter.hpp"
#include "crg.hpp"
#include "dihedral.hpp"
#include "pclie.hpp"

namespace malcev {

using Json = nlohmann::json;

inline Json to_json(const AbelianGroup& g) {
    Json factors = Json::array();
    for (const Integer& d : g.invariant_factors)
        factors.push_back(d.str());
    return Json{{"free_rank", g.free_rank},
                {"invariant_factors", factors},
                {"pretty", g.str()}};
}

inline Json to_json(const CoxLabel& l) {
    if (l.infinite())
        return Json("inf");
    return Json(l.value());
}

inline Json to_json(const CoxeterGraph& g) {
    Json verts = Json::array();
    for (const std::string& v : g.vertices())
        verts.push_back(v);
    Json matrix = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < g.size(); ++j)
            row.push_back(to_json(g.label(i, j)));
        matrix.push_back(row);
    }
    return Json{{"vertices", verts}, {"matrix", matrix}};
}

inline Json to_json(const IntegerMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

inline std::string trace_str(const std::string& w, const CommutationGraph& g) {
    if (w.empty())
        return "1";
    std::string s;
    for (unsigned char ch : w) {
        if (!s.empty())
            s += '*';
        s += g.label(ch);
    }
    return s;
}

// sorted graded-lexicographically because the underlying map is
inline Json to_json(const TruncatedSeries& s) {
    Json terms = Json::array();
    for (const auto& [w, c] : s.terms())
        terms.push_back(Json::array({trace_str(w, s.graph()),
                                     numerator(c).str(), denominator(c).str()}));
    return Json{{"degree", s.degree()}, {"terms", terms}};
}

inline std::string monoid_word_str(const MonoidWord& w) {
    if (w.empty())
        return "1";
    std::string s;
    for (char ch : w)
        s += ch == '0' ? "a0" : "a1";
    return s;
}

inline Json to_json(const GroupRingElement& x) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms())
        terms.push_back(Json::array({monoid_word_str(w), c.str()}));
    return terms;
}

inline Json to_json(const LaurentElement& x) {
    Json terms = Json::array();
    for (const auto& [k, c] : x.terms())
        terms.push_back(Json::array({k.first, k.second, c.str()}));
    return terms;
}

inline Json integer_list_json(const std::vector<Integer>& xs) {
    Json out = Json::array();
    for (const Integer& x : xs)
        out.push_back(x.str());
    return out;
}

namespace detail {

inline bool all_true(std::initializer_list<bool> xs) {
    for (bool x : xs)
        if (!x)
            return false;
    return true;
}

}  // namespace detail

// Analysis of one Artin group: blocks, both graded pieces, the right-angled
// quotient with its Lie dimension table, and the exp-generator check that
// every braid relator maps to the identity in the truncated envelope.
inline Json artin_report(const CoxeterGraph& g, int degree = 8) {
    if (degree < 2)
        throw input_error("artin: degree must be at least 2");
    Json report;
    report["command"] = "artin";
    report["degree"] = degree;
    report["input"] = to_json(g);

    ArtinPresentation pres = artin_presentation(g);
    Json relators = Json::array();
    for (const Word& r : pres.relators)
        relators.push_back(format_word(r, pres));
    report["presentation"] =
        Json{{"generators", pres.generators}, {"relators", relators}};

    OddPartition part = odd_partition(g);
    Json blocks = Json::array();
    for (const auto& b : part.blocks) {
        Json block = Json::array();
        for (std::size_t v : b)
            block.push_back(g.vertex(v));
        blocks.push_back(block);
    }
    report["blocks"] = blocks;
    report["rank"] = part.blocks.size();
    CoxeterGraph quo = quotient_graph(g);
    report["quotient_graph"] = to_json(quo);
    report["free_of_infinity"] = is_free_of_infinity(g);

    NilpotentQuotients nq = gr2(pres);
    report["gr1"] = to_json(nq.gr1);
    report["gr2"] = to_json(nq.gr2);
    report["gr2_rational_rank"] = nq.gr2.free_rank;
    report["gr2_tensor_q_trivial"] = nq.gr2.free_rank == 0;

    CommutationGraphPtr cg = raag_commutation_graph(quo);
    std::vector<Integer> dims = lie_dimensions(*cg, std::max(degree, 2));
    report["lie_dimensions"] = integer_list_json(dims);

    bool phi_ok = true;
    {
        const int phi_degree = std::min(degree, 8);
        TruncatedSeries one = TruncatedSeries::one(cg, phi_degree);
        for (const Word& r : pres.relators)
            if (!(phi_image(r, g, phi_degree) == one))
                phi_ok = false;
        report["phi"] = Json{{"degree", phi_degree},
                             {"relators_checked", pres.relators.size()},
                             {"all_map_to_identity", phi_ok}};
    }

    NilpotentQuotients mirrored = gr2(pres, Collection::mirrored);
    const bool gr1_ok = nq.gr1.free_rank == part.blocks.size() &&
                        nq.gr1.invariant_factors.empty();
    const bool d2_ok = dims.size() >= 2 && Integer(nq.gr2.free_rank) == dims[1];
    const bool mirror_ok = mirrored.gr1 == nq.gr1 && mirrored.gr2 == nq.gr2;
    report["cross_checks"] =
        Json{{"gr1_is_free_of_block_rank", gr1_ok},
             {"gr2_rank_matches_lie_d2", d2_ok},
             {"phi_relators_identity", phi_ok},
             {"mirrored_convention_agrees", mirror_ok},
             {"ok", detail::all_true({gr1_ok, d2_ok, phi_ok, mirror_ok})}};
    return report;
}

// The dihedral pipeline: boundary coefficients, chain identities, homology
// of the augmented complex, the induced top map and the five-term answer,
// cross-checked against the class-2 engine on the matching presentation.
inline Json dihedral_report(long e) {
    detail::require_even_degree(e);
    Json report;
    report["command"] = "dihedral";
    report["e"] = e;

    DihedralComplex cx = dihedral_complex(e);
    report["complex"] = Json{
        {"d1", Json{{"a0", to_json(cx.d1_a0)}, {"a1", to_json(cx.d1_a1)}}},
        {"d2", Json{{"a0", to_json(cx.d2_a0)}, {"a1", to_json(cx.d2_a1)}}}};

    LaurentElement x = chain_map_x(e);
    report["chain_map_x"] = to_json(x);
    report["chain_map_x_epsilon"] = x.epsilon().str();

    const bool identities = verify_chain_identities(e);
    report["chain_identities_ok"] = identities;

    std::vector<IntegerMatrix> aug = augmented_complex(e);
    report["augmented"] = Json{{"d1", to_json(aug[0])}, {"d2", to_json(aug[1])}};
    std::vector<AbelianGroup> h = homology(aug);
    Json hj = Json::array();
    for (const AbelianGroup& grp : h)
        hj.push_back(to_json(grp));
    report["homology"] = hj;

    IntegerMatrix h2 = induced_h2_map(e);
    const bool h1_iso = induced_h1_iso(e);
    report["h2_map"] = to_json(h2);
    report["h1_iso"] = h1_iso;
    AbelianGroup five = five_term_gr2(h2, h1_iso);
    report["gr2_five_term"] = to_json(five);

    NilpotentQuotients nq = gr2(artin_presentation(
        CoxeterGraph::dihedral(CoxLabel::finite(e))));
    report["gr2_presentation"] = to_json(nq.gr2);

    const bool homology_ok = h.size() == 3 && h[0] == AbelianGroup{1, {}} &&
                             h[1] == AbelianGroup{2, {}} && h[2] == AbelianGroup{1, {}};
    const bool agree = five == nq.gr2;
    report["cross_checks"] =
        Json{{"chain_identities_ok", identities},
             {"homology_is_free_1_2_1", homology_ok},
             {"five_term_matches_presentation", agree},
             {"ok", detail::all_true({identities, homology_ok, agree})}};
    return report;
}

// Both graded pieces for an arbitrary finite presentation, with the mirrored
// collection convention as a built-in cross-check.
inline Json nilq_report(const GroupPresentation& p) {
    p.validate();
    Json report;
    report["command"] = "nilq";
    Json relators = Json::array();
    for (const Word& r : p.relators)
        relators.push_back(format_word(r, p));
    report["presentation"] = Json{{"generators", p.generators}, {"relators", relators}};

    NilpotentQuotients nq = gr2(p);
    report["gr1"] = to_json(nq.gr1);
    report["gr2"] = to_json(nq.gr2);
    report["gr2_rational_rank"] = nq.gr2.free_rank;
    report["gr2_tensor_q_trivial"] = nq.gr2.free_rank == 0;

    NilpotentQuotients mirrored = gr2(p, Collection::mirrored);
    const bool mirror_ok = mirrored.gr1 == nq.gr1 && mirrored.gr2 == nq.gr2;
    report["cross_checks"] =
        Json{{"mirrored_convention_agrees", mirror_ok}, {"ok", mirror_ok}};
    return report;
}

// Classification of one reflection group: orbit count with provenance, the
// abelianized braid group, the rational descriptor, and (for family members
// of reasonable size) the independent orbit enumeration.
inline Json reflection_report(const ReflectionGroupSpec& spec,
                              const ExceptionalTable& table = ExceptionalTable::builtin()) {
    Json report;
    report["command"] = "reflection";
    report["spec"] = spec.str();
    report["kind"] = spec.family ? "family" : "exceptional";
    if (spec.family)
        report["parameters"] = Json{
            {"d", spec.family->d}, {"e", spec.family->e}, {"n", spec.family->n}};
    else
        report["parameters"] = Json{{"index", spec.exceptional}};

    ClassCount cc = c_formula(spec, table);
    report["rank"] = reflection_rank(spec, table);
    report["c"] = cc.c;
    report["c_provenance"] = cc.provenance;
    report["braid_ab"] = to_json(braid_ab(spec, table));

    MalcevDescriptor desc = malcev_descriptor(spec, table);
    Json pairs = Json::array();
    for (std::size_t i = 0; i < desc.graph->size(); ++i)
        for (std::size_t j = i + 1; j < desc.graph->size(); ++j)
            if (desc.graph->commutes(i, j))
                pairs.push_back(Json::array({desc.graph->label(i), desc.graph->label(j)}));
    report["descriptor"] = Json{{"vertices", desc.graph->vertices()},
                                {"commuting_pairs", pairs},
                                {"tag", desc.tag}};
    std::vector<Integer> dims = lie_dimensions(*desc.graph, 4);
    report["descriptor_lie_dimensions"] = integer_list_json(dims);

    bool oracle_agrees = true;
    if (spec.family) {
        // the enumeration is exact but quadratic in the arrangement; skip it
        // for arrangements past a fixed size so reports stay fast
        std::vector<Hyperplane> hs = hyperplanes(*spec.family);
        const bool applicable = hs.size() <= 2000;
        Json oracle;
        oracle["applicable"] = applicable;
        oracle["hyperplane_count"] = hs.size();
        if (applicable) {
            HyperplaneOrbits orbits = hyperplane_orbits(*spec.family);
            oracle["c"] = orbits.count();
            oracle["orbit_sizes"] = orbits.sizes();
            oracle_agrees = orbits.count() == static_cast<std::size_t>(cc.c);
        }
        report["oracle"] = oracle;
    }

    const bool desc_ok = dims.size() >= 2 && dims[0] == cc.c &&
                         dims[1] == (cc.c == 3 ? 1 : 0);
    const bool ab_ok = braid_ab(spec, table).free_rank == static_cast<std::size_t>(cc.c);
    report["cross_checks"] =
        Json{{"formula_matches_orbit_enumeration", oracle_agrees},
             {"descriptor_lie_dimensions_consistent", desc_ok},
             {"ab_rank_is_c", ab_ok},
             {"ok", detail::all_true({oracle_agrees, desc_ok, ab_ok})}};
    return report;
}

// Growth and Lie data of a right-angled diagram: Hilbert series against the
// brute-force trace count, Lie dimensions with the product round-trip, and
// grouplike/primitive sanity samples.
inline Json raag_report(const CoxeterGraph& g, int degree = 8) {
    if (degree < 1)
        throw input_error("raag: degree must be at least 1");
    Json report;
    report["command"] = "raag";
    report["degree"] = degree;
    report["input"] = to_json(g);

    CommutationGraphPtr cg = raag_commutation_graph(g);
    std::vector<Integer> h = hilbert_series(*cg, degree);
    report["hilbert"] = integer_list_json(h);
    std::vector<Integer> dims = lie_dimensions(*cg, degree);
    report["lie_dimensions"] = integer_list_json(dims);

    const bool witt_ok = [&] {
        std::vector<Integer> prod = witt_product(dims, degree);
        std::vector<Integer> p = clique_polynomial(*cg);
        p.resize(degree + 1);
        return prod == p;
    }();
    report["witt_round_trip_ok"] = witt_ok;

    // direct enumeration is exponential; cap the compared length so the
    // check stays under a few hundred thousand words
    int bfs_len = 0;
    {
        double budget = 100000.0;
        while (bfs_len < degree && budget >= static_cast<double>(cg->size())) {
            budget /= static_cast<double>(cg->size());
            ++bfs_len;
        }
    }
    bool bfs_ok = true;
    for (int l = 0; l <= bfs_len; ++l)
        if (count_traces_bfs(*cg, l) != h[l])
            bfs_ok = false;
    report["bfs_check"] = Json{{"length", bfs_len}, {"agrees", bfs_ok}};

    Json samples;
    const int sample_degree = std::min(degree, 6);
    bool grouplike_ok = true;
    for (std::size_t i = 0; i < cg->size(); ++i) {
        TruncatedSeries xi = TruncatedSeries::generator(cg, sample_degree, i);
        if (!is_grouplike(exp(xi)) || !is_primitive(xi))
            grouplike_ok = false;
    }
    samples["degree"] = sample_degree;
    samples["exp_generators_grouplike"] = grouplike_ok;
    if (cg->size() >= 2) {
        TruncatedSeries x0 = TruncatedSeries::generator(cg, sample_degree, 0);
        TruncatedSeries x1 = TruncatedSeries::generator(cg, sample_degree, 1);
        samples["bch_first_two"] = to_json(bch(x0, x1));
    }
    report["samples"] = samples;

    report["cross_checks"] = Json{{"hilbert_matches_enumeration", bfs_ok},
                                  {"witt_round_trip_ok", witt_ok},
                                  {"grouplike_samples_ok", grouplike_ok},
                                  {"ok", detail::all_true({bfs_ok, witt_ok, grouplike_ok})}};
    return report;
}

inline bool report_cross_checks_ok(const Json& report) {
    if (!report.contains("cross_checks"))
        return true;
    return report["cross_checks"].value("ok", true);
}

namespace detail {

inline void render_text_value(const Json& v, const std::string& indent, std::string& out);

inline bool scalar_array(const Json& a) {
    for (const Json& x : a)
        if (x.is_object() || (x.is_array() && !scalar_array(x)))
            return false;
    return true;
}

inline std::string scalar_str(const Json& v) {
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

inline void render_text_value(const Json& v, const std::string& indent, std::string& out) {
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            if (val.is_object() || (val.is_array() && !scalar_array(val))) {
                out += indent + key + ":\n";
                render_text_value(val, indent + "  ", out);
            } else if (val.is_array()) {
                out += indent + key + ": " + val.dump() + "\n";
            } else {
                out += indent + key + ": " + scalar_str(val) + "\n";
            }
        }
    } else if (v.is_array()) {
        for (const Json& x : v) {
            if (x.is_object() || (x.is_array() && !scalar_array(x))) {
                out += indent + "-\n";
                render_text_value(x, indent + "  ", out);
            } else {
                out += indent + "- " + (x.is_array() ? x.dump() : scalar_str(x)) + "\n";
            }
        }
    } else {
        out += indent + scalar_str(v) + "\n";
    }
}

}  // namespace detail

inline std::string render_text(const Json& report) {
    std::string out;
    detail::render_text_value(report, "", out);
    return out;
}

}  // namespace malcev
