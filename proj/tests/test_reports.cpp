#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <malcev/report.hpp>

using malcev::AbelianGroup;
using malcev::input_error;
using malcev::Integer;
using malcev::Json;

TEST_CASE("json building blocks") {
    SECTION("abelian groups") {
        Json j = malcev::to_json(AbelianGroup{2, {Integer(6)}});
        CHECK(j["free_rank"] == 2);
        CHECK(j["invariant_factors"] == Json::array({"6"}));
        CHECK(j["pretty"] == "Z^2 x Z/6");
        CHECK(malcev::to_json(AbelianGroup{})["pretty"] == "0");
    }
    SECTION("matrices keep string entries") {
        malcev::IntegerMatrix m(1, 2);
        m(0, 1) = Integer("123456789012345678901234567890");
        Json j = malcev::to_json(m);
        CHECK(j["rows"] == 1);
        CHECK(j["cols"] == 2);
        CHECK(j["entries"][0][1] == "123456789012345678901234567890");
    }
    SECTION("labels and words render readably") {
        malcev::CommutationGraphPtr g =
            malcev::make_commutation_graph({"x", "y"}, {});
        CHECK(malcev::trace_str(std::string("\0\1", 2), *g) == "x*y");
        CHECK(malcev::trace_str("", *g) == "1");
        CHECK(malcev::monoid_word_str("010") == "a0a1a0");
        CHECK(malcev::monoid_word_str("") == "1");
    }
}

TEST_CASE("artin report") {
    malcev::CoxeterGraph b3 = malcev::parse_coxeter("s1 s2 s3\n4 2\n3\n");

    SECTION("byte-identical across runs") {
        CHECK(malcev::artin_report(b3).dump(2) == malcev::artin_report(b3).dump(2));
    }
    SECTION("braid diagram on three strands") {
        Json r = malcev::artin_report(b3);
        CHECK(r["command"] == "artin");
        CHECK(r["degree"] == 8);
        CHECK(r["blocks"] == Json::array({Json::array({"s1"}),
                                          Json::array({"s2", "s3"})}));
        CHECK(r["rank"] == 2);
        CHECK(r["free_of_infinity"] == true);
        CHECK(r["gr1"]["pretty"] == "Z^2");
        CHECK(r["gr2"]["pretty"] == "0");
        CHECK(r["gr2_tensor_q_trivial"] == true);
        CHECK(r["quotient_graph"]["vertices"] == Json::array({"s1", "s2"}));
        CHECK(r["lie_dimensions"][0] == "2");
        CHECK(r["lie_dimensions"][1] == "0");
        CHECK(r["phi"]["all_map_to_identity"] == true);
        CHECK(r["phi"]["relators_checked"] == 3);
        CHECK(r["cross_checks"]["ok"] == true);
        CHECK(malcev::report_cross_checks_ok(r));
    }
    SECTION("even dihedral torsion shows up") {
        Json r = malcev::artin_report(malcev::parse_coxeter("a0 a1\n4\n"), 4);
        CHECK(r["gr2"]["pretty"] == "Z/2");
        CHECK(r["gr2_rational_rank"] == 0);
        CHECK(r["gr2_tensor_q_trivial"] == true);
        CHECK(r["cross_checks"]["ok"] == true);
    }
    SECTION("free groups keep a rational class") {
        Json r = malcev::artin_report(malcev::parse_coxeter("a b\ninf\n"), 8);
        CHECK(r["gr2"]["pretty"] == "Z");
        CHECK(r["gr2_tensor_q_trivial"] == false);
        CHECK(r["lie_dimensions"] ==
              Json::array({"2", "1", "2", "3", "6", "9", "18", "30"}));
        CHECK(r["cross_checks"]["ok"] == true);
    }
    SECTION("degree bound enforced") {
        CHECK_THROWS_AS(malcev::artin_report(b3, 1), input_error);
    }
}

TEST_CASE("dihedral report") {
    SECTION("degree six pipeline") {
        Json r = malcev::dihedral_report(6);
        CHECK(r["command"] == "dihedral");
        CHECK(r["e"] == 6);
        CHECK(r["chain_map_x_epsilon"] == "3");
        CHECK(r["chain_identities_ok"] == true);
        CHECK(r["h1_iso"] == true);
        CHECK(r["h2_map"]["entries"] == Json::array({Json::array({"3"})}));
        CHECK(r["gr2_five_term"]["pretty"] == "Z/3");
        CHECK(r["gr2_presentation"]["pretty"] == "Z/3");
        REQUIRE(r["homology"].size() == 3);
        CHECK(r["homology"][0]["pretty"] == "Z");
        CHECK(r["homology"][1]["pretty"] == "Z^2");
        CHECK(r["homology"][2]["pretty"] == "Z");
        CHECK(r["cross_checks"]["ok"] == true);
        CHECK(malcev::dihedral_report(6).dump(2) == r.dump(2));
    }
    SECTION("degree two is torsion free") {
        Json r = malcev::dihedral_report(2);
        CHECK(r["gr2_five_term"]["pretty"] == "0");
        CHECK(r["cross_checks"]["ok"] == true);
    }
    SECTION("odd degrees rejected") {
        CHECK_THROWS_AS(malcev::dihedral_report(5), input_error);
        CHECK_THROWS_AS(malcev::dihedral_report(0), input_error);
    }
}

TEST_CASE("nilq report") {
    Json r = malcev::nilq_report(malcev::parse_presentation("a b\na b A B\n"));
    CHECK(r["command"] == "nilq");
    CHECK(r["gr1"]["pretty"] == "Z^2");
    CHECK(r["gr2"]["pretty"] == "0");
    CHECK(r["presentation"]["relators"] == Json::array({"a b a' b'"}));
    CHECK(r["cross_checks"]["mirrored_convention_agrees"] == true);
    CHECK(r["cross_checks"]["ok"] == true);
}

TEST_CASE("reflection report") {
    SECTION("family member with all three orbits") {
        Json r = malcev::reflection_report(malcev::parse_reflection_spec("G(4,2,2)"));
        CHECK(r["command"] == "reflection");
        CHECK(r["kind"] == "family");
        CHECK(r["parameters"] == Json{{"d", 2}, {"e", 2}, {"n", 2}});
        CHECK(r["c"] == 3);
        CHECK(r["c_provenance"] == "closed-form");
        CHECK(r["braid_ab"]["pretty"] == "Z^3");
        CHECK(r["descriptor"]["tag"] == "Q x (F2 tensor Q)");
        CHECK(r["descriptor"]["vertices"] == Json::array({"z", "f1", "f2"}));
        CHECK(r["oracle"]["applicable"] == true);
        CHECK(r["oracle"]["hyperplane_count"] == 6);
        CHECK(r["oracle"]["c"] == 3);
        CHECK(r["oracle"]["orbit_sizes"] == Json::array({2, 2, 2}));
        CHECK(r["cross_checks"]["ok"] == true);
    }
    SECTION("exceptional group from the table") {
        Json r = malcev::reflection_report(malcev::parse_reflection_spec("G7"));
        CHECK(r["kind"] == "exceptional");
        CHECK(r["parameters"] == Json{{"index", 7}});
        CHECK(r["rank"] == 2);
        CHECK(r["c"] == 3);
        CHECK(r["c_provenance"] == "classification");
        CHECK_FALSE(r.contains("oracle"));
        CHECK(r["cross_checks"]["ok"] == true);
    }
    SECTION("a custom table wins over the builtin") {
        malcev::ExceptionalTable t = malcev::ExceptionalTable::parse("4 2 2 survey\n");
        Json r = malcev::reflection_report(malcev::parse_reflection_spec("G4"), t);
        CHECK(r["c"] == 2);
        CHECK(r["c_provenance"] == "survey");
        CHECK(r["descriptor"]["tag"] == "Q^2");
    }
}

TEST_CASE("raag report") {
    SECTION("path on three vertices") {
        Json r = malcev::raag_report(malcev::parse_coxeter("a b c\n2 inf\n2\n"), 6);
        CHECK(r["command"] == "raag");
        CHECK(r["hilbert"] == Json::array({"1", "3", "7", "15", "31", "63", "127"}));
        CHECK(r["lie_dimensions"] == Json::array({"3", "1", "2", "3", "6", "9"}));
        CHECK(r["witt_round_trip_ok"] == true);
        CHECK(r["bfs_check"]["agrees"] == true);
        CHECK(r["samples"]["exp_generators_grouplike"] == true);
        CHECK(r["samples"].contains("bch_first_two"));
        CHECK(r["cross_checks"]["ok"] == true);
        CHECK(malcev::raag_report(malcev::parse_coxeter("a b c\n2 inf\n2\n"), 6).dump(2) ==
              r.dump(2));
    }
    SECTION("single vertex has no bch sample") {
        Json r = malcev::raag_report(malcev::parse_coxeter("a\n"), 4);
        CHECK_FALSE(r["samples"].contains("bch_first_two"));
        CHECK(r["hilbert"] == Json::array({"1", "1", "1", "1", "1"}));
    }
    SECTION("labels beyond 2 and inf are refused") {
        CHECK_THROWS_WITH(malcev::raag_report(malcev::parse_coxeter("a b\n3\n")),
                          Catch::Matchers::ContainsSubstring("not right-angled"));
    }
    SECTION("degree bound enforced") {
        CHECK_THROWS_AS(malcev::raag_report(malcev::parse_coxeter("a\n"), 0), input_error);
    }
}

TEST_CASE("text rendering and the ok flag") {
    Json r = malcev::dihedral_report(6);
    std::string text = malcev::render_text(r);
    CHECK(text.find("command: dihedral") != std::string::npos);
    CHECK(text.find("e: 6") != std::string::npos);
    CHECK(text.find("chain_map_x_epsilon: 3") != std::string::npos);

    CHECK(malcev::report_cross_checks_ok(Json{{"command", "x"}}));
    CHECK_FALSE(malcev::report_cross_checks_ok(
        Json{{"cross_checks", Json{{"ok", false}}}}));
}
