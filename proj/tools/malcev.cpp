// Command line front end. Subcommands analyze an Artin diagram, the even
// dihedral homology pipeline, an arbitrary finite presentation, a complex
// reflection group, or a right-angled diagram, and print one JSON (or text)
// report to stdout. Exit codes: 0 success, 2 bad input, 3 internal failure
// or a failed cross-check.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <malcev/malcev.hpp>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw malcev::input_error("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Options {
    std::string format = "json";
    bool timing = false;
};

int emit(malcev::Json report, const Options& opts,
         std::chrono::steady_clock::time_point start) {
    if (opts.timing) {
        auto elapsed = std::chrono::steady_clock::now() - start;
        report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    if (opts.format == "text")
        std::cout << malcev::render_text(report);
    else
        std::cout << report.dump(2) << "\n";
    return malcev::report_cross_checks_ok(report) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lower-central and Malcev completion data for Artin and "
                 "complex braid groups"};
    app.require_subcommand(1);

    Options opts;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
        cmd->add_flag("--timing", opts.timing,
                      "add timing_ms to the report (off by default so output "
                      "is reproducible)");
    };

    std::string path;
    int degree = 8;
    long dihedral_e = 0;
    std::string reflection_spec;
    std::string table_path;

    CLI::App* artin = app.add_subcommand(
        "artin", "analyze the Artin group of a Coxeter diagram file");
    artin->add_option("file", path, "diagram file (text or JSON form)")->required();
    artin->add_option("--degree", degree, "truncation degree")->capture_default_str();
    add_common(artin);

    CLI::App* dihedral = app.add_subcommand(
        "dihedral", "run the homology pipeline for even dihedral type e");
    dihedral->add_option("e", dihedral_e, "even dihedral type")->required();
    add_common(dihedral);

    CLI::App* nilq = app.add_subcommand(
        "nilq", "graded pieces gr1, gr2 of a finite presentation file");
    nilq->add_option("file", path, "presentation file")->required();
    add_common(nilq);

    CLI::App* reflection = app.add_subcommand(
        "reflection", "classify a complex reflection group G(m,p,n) or G4..G37");
    reflection->add_option("spec", reflection_spec, "group, e.g. G(4,2,2) or G7")
        ->required();
    reflection->add_option("--table", table_path,
                           "classification table for exceptional groups");
    add_common(reflection);

    CLI::App* raag = app.add_subcommand(
        "raag", "trace growth and Lie dimensions of a right-angled diagram file");
    raag->add_option("file", path, "diagram file with labels 2 and inf only")->required();
    raag->add_option("--degree", degree, "truncation degree")->capture_default_str();
    add_common(raag);

    CLI11_PARSE(app, argc, argv);

    const auto start = std::chrono::steady_clock::now();
    try {
        if (artin->parsed())
            return emit(malcev::artin_report(malcev::parse_coxeter(read_file(path)),
                                             degree),
                        opts, start);
        if (dihedral->parsed())
            return emit(malcev::dihedral_report(dihedral_e), opts, start);
        if (nilq->parsed())
            return emit(malcev::nilq_report(malcev::parse_presentation(read_file(path))),
                        opts, start);
        if (reflection->parsed()) {
            malcev::ExceptionalTable custom;
            if (!table_path.empty())
                custom = malcev::ExceptionalTable::parse(read_file(table_path));
            const malcev::ExceptionalTable& table =
                table_path.empty() ? malcev::ExceptionalTable::builtin() : custom;
            return emit(malcev::reflection_report(
                            malcev::parse_reflection_spec(reflection_spec), table),
                        opts, start);
        }
        if (raag->parsed())
            return emit(malcev::raag_report(malcev::parse_coxeter(read_file(path)),
                                            degree),
                        opts, start);
    } catch (const malcev::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
