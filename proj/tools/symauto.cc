// Command-line driver: `symauto solve [options] FILE`.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symauto/error.hh"
#include "symauto/smtlib.hh"

namespace {

int run_solve(const std::string& file, const symauto::SolverConfig& config) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << file << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        symauto::smtlib::Script script = symauto::smtlib::parse_script(buf.str());
        symauto::SolveResult r = symauto::smtlib::solve(script, config);
        std::cout << symauto::to_string(r) << std::endl;
    } catch (const symauto::ParseError& e) {
        std::cerr << file << ":" << e.what() << "\n";
        return 1;
    } catch (const symauto::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic automata and transducer based string constraint solver"};
    app.require_subcommand(1);

    symauto::SolverConfig config;
    std::string file;
    std::string dot_dir;
    bool verbose = false;

    CLI::App* solve = app.add_subcommand("solve", "Decide an SMT-LIB string script (prints sat, unsat, or unknown)");
    solve->add_option("file", file, "SMT-LIB 2 input file")->required();
    solve->add_option("--dump-dot", dot_dir, "Write one DOT file per propagated variable domain into this directory");
    solve->add_option("--max-states", config.limits.max_states, "State ceiling for products and determinization")
        ->check(CLI::PositiveNumber);
    solve->add_flag("-v,--verbose", verbose, "Print the replace semantics notice and per-constraint domain sizes");

    CLI11_PARSE(app, argc, argv);

    if (!dot_dir.empty()) { config.dot_dir = dot_dir; }
    config.verbosity = verbose ? 1 : 0;
    return run_solve(file, config);
}
