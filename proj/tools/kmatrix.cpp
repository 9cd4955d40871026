#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kmx/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw kmx::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

kmx::Json load(const std::string& path) { return kmx::parse_json(slurp(path)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact modular data of toral Chern-Simons theories from K-matrices"};
    app.require_subcommand(1);

    kmx::cli::Options opt;
    if (const char* cap_env = std::getenv("KMATRIX_CAP"))
        opt.cap = static_cast<std::size_t>(std::strtoull(cap_env, nullptr, 10));

    std::string in1, in2;
    unsigned genus = 1;
    bool json_mode = false, table_mode = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--cap", opt.cap, "element/label cap override");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full report for one K-matrix");
    analyze->add_option("input", in1, "K JSON file (or - for stdin)")->required();
    analyze->add_option("--genus-max", opt.genus_max, "max genus for dimension tables");
    analyze->add_flag("--json", json_mode, "JSON output (default)");
    analyze->add_flag("--table", table_mode, "human-readable table output");
    add_common(analyze);

    CLI::App* modular = app.add_subcommand("modular", "genus-g S/T data for one K-matrix");
    modular->add_option("input", in1, "K JSON file")->required();
    modular->add_option("--genus", genus, "genus (default 1)");
    add_common(modular);

    CLI::App* reconstruct =
        app.add_subcommand("reconstruct", "rebuild (G,q,Omega) from S/T data");
    reconstruct->add_option("input", in1, "S/T JSON file")->required();

    CLI::App* equiv = app.add_subcommand("equiv", "measurable-data equivalence");
    equiv->add_option("k1", in1, "first K JSON file")->required();
    equiv->add_option("k2", in2, "second K JSON file")->required();
    add_common(equiv);

    CLI::App* maslov = app.add_subcommand("maslov", "Kashiwara-Maslov indices");
    maslov->add_option("input", in1, "symplectic-data JSON file")->required();

    app.add_subcommand("selftest", "run the embedded golden and property suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            opt.table = table_mode && !json_mode;
            return kmx::cli::run_analyze(load(in1), opt, std::cout, std::cerr);
        }
        if (modular->parsed())
            return kmx::cli::run_modular(load(in1), genus, opt, std::cout, std::cerr);
        if (reconstruct->parsed())
            return kmx::cli::run_reconstruct(load(in1), std::cout, std::cerr);
        if (equiv->parsed())
            return kmx::cli::run_equiv(load(in1), load(in2), opt, std::cout, std::cerr);
        if (maslov->parsed())
            return kmx::cli::run_maslov(load(in1), std::cout, std::cerr);
        return kmx::cli::run_selftest(std::cout);
    } catch (const kmx::Error& e) {
        std::cerr << e.kind() << ": " << e.what() << "\n";
        return kmx::cli::exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
