#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cohomog7/cli.hpp"
#include "cohomog7/version.hpp"

namespace cli = cohomog7::cli;

int main(int argc, char** argv) {
    CLI::App app{
        "cohomog7: integral cohomology and classification of the simply connected "
        "7-dimensional cohomogeneity-one manifold families L, M, N, O"};
    app.set_version_flag("--version", std::string("cohomog7 ") + cohomog7::kVersion);
    app.require_subcommand(1);

    // info
    std::string info_params;
    bool info_json = false;
    auto* info = app.add_subcommand("info", "classification report for one parameter tuple");
    info->add_option("params", info_params, "e.g. \"N(1,1)(2,1)\" or \"O(2,1:1)\"")->required();
    info->add_flag("--json", info_json, "machine-readable report");

    // validate
    std::string validate_params;
    auto* validate = app.add_subcommand("validate", "check the family restrictions only");
    validate->add_option("params", validate_params, "parameter string")->required();

    // search
    std::string families_text = "L,M,N,O";
    long long bound = 0;
    std::string r_filter;
    bool only_type_er = false, only_eschenburg = false;
    bool search_json = false, search_csv = false, serial = false;
    auto* search = app.add_subcommand("search", "enumerate and classify parameter tuples");
    search->add_option("--families", families_text, "comma-separated subset of L,M,N,O")
        ->capture_default_str();
    search->add_option("--bound", bound, "max |parameter|")->required()->check(CLI::PositiveNumber);
    search->add_option("--r", r_filter, "keep only rows with this r");
    search->add_flag("--type-er", only_type_er, "keep only cohomology type E_r");
    search->add_flag("--eschenburg", only_eschenburg, "keep only Eschenburg-ring candidates");
    auto* sj = search->add_flag("--json", search_json, "JSON-lines output");
    auto* sc = search->add_flag("--csv", search_csv, "CSV output");
    sj->excludes(sc);
    search->add_flag("--serial", serial, "use the serial reference sweep");

    // table
    std::string table_path;
    bool table_json = false, table_csv = false, skip_invalid = false;
    auto* table = app.add_subcommand("table", "summary table for a file of parameter strings");
    table->add_option("file", table_path, "one parameter string per line, '#' comments")
        ->required();
    auto* tj = table->add_flag("--json", table_json, "JSON-lines output");
    auto* tc = table->add_flag("--csv", table_csv, "CSV output");
    tj->excludes(tc);
    table->add_flag("--skip-invalid", skip_invalid, "warn on bad lines instead of failing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kExitOk : cli::kExitUsage;
    }

    try {
        if (info->parsed()) {
            return cli::cmd_info(info_params, info_json, std::cout, std::cerr);
        }
        if (validate->parsed()) {
            return cli::cmd_validate(validate_params, std::cout, std::cerr);
        }
        if (search->parsed()) {
            cli::SearchOptions options;
            options.spec.families = cli::parse_family_list(families_text);
            options.spec.bound = bound;
            if (!r_filter.empty()) options.spec.r_filter = mpz_class(r_filter, 10);
            options.spec.only_type_er = only_type_er;
            options.spec.only_eschenburg = only_eschenburg;
            options.format = search_json  ? cli::OutputFormat::Json
                             : search_csv ? cli::OutputFormat::Csv
                                          : cli::OutputFormat::Human;
            options.mode =
                serial ? cohomog7::SweepMode::Serial : cohomog7::SweepMode::Parallel;
            return cli::cmd_search(options, std::cout, std::cerr);
        }
        if (table->parsed()) {
            cli::TableOptions options;
            options.path = table_path;
            options.format = table_json  ? cli::OutputFormat::Json
                             : table_csv ? cli::OutputFormat::Csv
                                         : cli::OutputFormat::Human;
            options.skip_invalid = skip_invalid;
            return cli::cmd_table(options, std::cout, std::cerr);
        }
    } catch (const cohomog7::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const cohomog7::internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return cli::kExitInternal;
    }
    return cli::kExitUsage;
}
