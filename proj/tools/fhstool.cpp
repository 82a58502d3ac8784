// Command-line front end: generate sequence sets, analyze sequence files,
// reproduce the published summary table, and run the property suite.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fhs/constructions.hpp"
#include "fhs/report.hpp"
#include "fhs/sequence_io.hpp"
#include "fhs/table1.hpp"
#include "fhs/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_property_violation = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_io = 3;

int cmd_generate(const fhs::construction_spec& spec, const std::string& out_path) {
    fhs::sequence_set set = fhs::generate(spec); // throws invalid_param on bad parameters
    fhs::write_sequence_file(set, out_path);
    std::cout << set.length() << ' ' << set.alphabet_size() << ' ' << set.size() << '\n';
    return exit_ok;
}

int cmd_analyze(const std::string& in_path, bool as_json) {
    fhs::sequence_set set = fhs::read_sequence_file(in_path);
    set.prov.params.emplace_back("sequences", set.size());
    set.prov.notes.push_back("loaded from " + in_path);
    fhs::analysis_report rep = fhs::build_analysis_report(set);
    if (as_json)
        std::cout << fhs::report_to_json(rep).dump(2) << '\n';
    else
        std::cout << fhs::report_to_text(rep);
    return exit_ok;
}

int cmd_table1(std::uint32_t max_q, bool as_json) {
    auto rows = fhs::run_table1(max_q);
    if (!as_json) {
        std::cout << fhs::table1_to_text(rows);
        return exit_ok;
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r;
        r["row"] = row.row;
        r["skipped"] = row.skipped;
        r["instance"] = row.instance;
        r["shape"] = row.shape;
        r["notes"] = row.notes;
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& c : row.cells)
            cells.push_back({{"column", c.column},
                             {"expected", c.expected},
                             {"actual", c.actual},
                             {"match", c.match},
                             {"note", c.note}});
        r["cells"] = cells;
        j.push_back(r);
    }
    std::cout << j.dump(2) << '\n';
    return exit_ok;
}

int cmd_verify(const fhs::verify_options& opt) {
    auto outcome = fhs::run_verify(opt);
    std::cout << outcome.log;
    return outcome.pass ? exit_ok : exit_property_violation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"frequency-hopping sequence toolkit"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "generate a sequence set and write it to a file");
    fhs::construction_spec spec;
    std::string out_path;
    gen->add_option("--construction", spec.name,
                    "one of: kumar, nhz, p2p, cyclotomic-a, cyclotomic-b, corollary16, multiplicative, theorem17")
        ->required();
    gen->add_option("--p", spec.p, "prime parameter");
    gen->add_option("--q", spec.q, "prime-power field order");
    gen->add_option("--m", spec.m, "alphabet/class count M");
    gen->add_option("--n", spec.n, "length parameter N");
    gen->add_option("--d", spec.d, "zone parameter d");
    gen->add_option("--k", spec.k, "interleaving factor k");
    gen->add_option("--out", out_path, "output sequence file")->required();

    // analyze
    auto* ana = app.add_subcommand("analyze", "full correlation and bound report for a sequence file");
    std::string in_path;
    bool ana_json = false;
    ana->add_option("input", in_path, "sequence file")->required();
    ana->add_flag("--json", ana_json, "emit a single JSON document");

    // table1
    auto* tab = app.add_subcommand("table1", "reproduce the published summary table at desk scale");
    std::uint32_t max_q = 256;
    bool tab_json = false;
    tab->add_option("--max-q", max_q, "parameter ceiling for row instances (default 256)");
    tab->add_flag("--json", tab_json, "emit JSON");

    // verify
    auto* ver = app.add_subcommand("verify", "run the seeded property suite");
    fhs::verify_options vopt;
    ver->add_option("--seed", vopt.seed, "random seed (default 12345)");
    ver->add_option("--cases", vopt.cases, "random-set case count (default 1000)");
    ver->add_option("--interleave-cases", vopt.interleave_cases, "interleaving fuzz count (default 100)");
    ver->add_option("--lemma11-max-q", vopt.lemma11_max_q, "field-order ceiling for the row-sum sweep");
    ver->add_flag("--inject-fault", vopt.inject_fault, "self-test: corrupt one sum and require detection");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (gen->parsed()) return cmd_generate(spec, out_path);
        if (ana->parsed()) return cmd_analyze(in_path, ana_json);
        if (tab->parsed()) return cmd_table1(max_q, tab_json);
        if (ver->parsed()) return cmd_verify(vopt);
    } catch (const fhs::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const fhs::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_input;
    }
    return exit_bad_input;
}
