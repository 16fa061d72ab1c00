#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lagr/problem.hpp"

namespace {

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

int run(const std::string& command, const std::string& input,
        const std::string& output, const std::string& tol_spec,
        const std::string& pair, const std::string& triple,
        const std::string& loop, int steps) {
    try {
        lagr::ProblemFile problem = lagr::parse_problem(input);
        if (!tol_spec.empty()) {
            const auto parts = split_names(tol_spec);
            if (parts.empty() || parts.size() > 2)
                throw lagr::InvalidArgument("--tol expects REL or REL,ABS");
            problem.tol.rel_eps = std::stod(parts[0]);
            if (parts.size() == 2) problem.tol.abs_eps = std::stod(parts[1]);
        }
        lagr::RunOptions options;
        if (!pair.empty()) options.pair = split_names(pair);
        if (!triple.empty()) options.triple = split_names(triple);
        options.loop = loop;
        options.steps = steps;

        const std::string report = lagr::run_command(command, problem, options);
        if (output.empty()) {
            std::cout << report;
        } else {
            std::ofstream out(output, std::ios::binary);
            if (!out) throw lagr::IoError("cannot write \"" + output + "\"");
            out << report;
        }
        return 0;
    } catch (const lagr::ContractViolation& e) {
        nlohmann::ordered_json err;
        err["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    } catch (const lagr::Error& e) {
        nlohmann::ordered_json err;
        err["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lagrangian transversality toolkit"};
    app.require_subcommand(1);

    std::string input, output, tol_spec, pair, triple, loop;
    int steps = 17;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"validate", "check every named lagrangian and loop"},
        {"transversal", "pairwise transversality report"},
        {"kashiwara", "polarized triple form: matrix, rank, signature"},
        {"deform", "rotate a pair into transversal position"},
        {"loop-index", "integer index of a sampled closed loop"},
        {"lk", "rank/signature class of a transversal triple"}};
    for (const auto& [name, description] : commands) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("--input", input, "problem file (JSON)")->required();
        sub->add_option("--output", output, "report path (default stdout)");
        sub->add_option("--tol", tol_spec, "tolerance REL[,ABS]");
        sub->add_option("--pair", pair, "two lagrangian names A,B");
        sub->add_option("--triple", triple, "three lagrangian names A,B,C");
        sub->add_option("--loop", loop, "loop name");
        sub->add_option("--steps", steps, "deformation sample count");
    }

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();
    return run(command, input, output, tol_spec, pair, triple, loop, steps);
}
