#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lagr/kashiwara.hpp"
#include "lagr/loop.hpp"
#include "lagr/phase_space.hpp"

namespace lagr {

/// A parsed and validated batch problem: one eps-hermitian space plus
/// named lagrangians (raw input bases kept for reporting) and loops.
struct ProblemFile {
    int epsilon = -1;
    int dimension = 0;
    Tolerance tol;
    EpsSpacePtr space;
    std::map<std::string, Eigen::MatrixXd> raw_lagrangians;
    std::map<std::string, Lagrangian> lagrangians;
    std::map<std::string, LagrangianLoop> loops;
};

ProblemFile parse_problem(const std::string& path);
ProblemFile parse_problem_text(const std::string& text);

struct RunOptions {
    std::vector<std::string> pair;   // empty or 2 names
    std::vector<std::string> triple; // empty or 3 names
    std::string loop;                // empty or a loop name
    int steps = 17;
};

/// Dispatches one of {validate, transversal, kashiwara, deform,
/// loop-index, lk} and returns the JSON report text (deterministic for
/// identical inputs).  Throws ContractViolation when the two sides of
/// the transversality criterion disagree.
std::string run_command(const std::string& command, const ProblemFile& problem,
                        const RunOptions& options);

} // namespace lagr
