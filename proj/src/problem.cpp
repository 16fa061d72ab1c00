#include "lagr/problem.hpp"

#include "lagr/deformation.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lagr {

namespace {

using json = nlohmann::ordered_json;

Eigen::MatrixXd parse_matrix(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array() || j.empty())
        throw SchemaError(field + ": expected a non-empty array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    if (!j[0].is_array())
        throw SchemaError(field + ": rows must be arrays of numbers");
    cols = j[0].size();
    Eigen::MatrixXd m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw SchemaError(field + ": ragged or non-array row " +
                              std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[r][c].is_number())
                throw SchemaError(field + ": entry (" + std::to_string(r) +
                                  "," + std::to_string(c) + ") is not a number");
            const double v = j[r][c].get<double>();
            if (!std::isfinite(v))
                throw SchemaError(field + ": entry (" + std::to_string(r) +
                                  "," + std::to_string(c) + ") is not finite");
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
        }
    }
    return m;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_to_json(const Eigen::VectorXd& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

const Lagrangian& named_lagrangian(const ProblemFile& p,
                                   const std::string& name) {
    auto it = p.lagrangians.find(name);
    if (it == p.lagrangians.end())
        throw UnknownName("unknown lagrangian \"" + name + "\"");
    return it->second;
}

std::vector<std::string> resolve_triple(const ProblemFile& p,
                                        const RunOptions& options) {
    if (options.triple.size() == 3) return options.triple;
    if (!options.triple.empty())
        throw InvalidArgument("--triple needs exactly three names");
    if (p.lagrangians.size() == 3) {
        std::vector<std::string> names;
        for (const auto& [name, _] : p.lagrangians) names.push_back(name);
        return names;
    }
    throw InvalidArgument(
        "a triple of lagrangian names is required (--triple A,B,C)");
}

} // namespace

ProblemFile parse_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_text(buffer.str());
}

ProblemFile parse_problem_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("top level: expected an object");
    if (doc.contains("schema_version") &&
        (!doc["schema_version"].is_number_integer() ||
         doc["schema_version"].get<int>() != 1))
        throw SchemaError("schema_version: only version 1 is supported");

    ProblemFile p;
    if (!doc.contains("epsilon")) throw SchemaError("epsilon: missing");
    if (!doc["epsilon"].is_number_integer())
        throw SchemaError("epsilon: expected an integer");
    p.epsilon = doc["epsilon"].get<int>();
    if (p.epsilon != 1 && p.epsilon != -1)
        throw SchemaError("epsilon: must be +1 or -1");

    if (!doc.contains("dimension")) throw SchemaError("dimension: missing");
    if (!doc["dimension"].is_number_integer())
        throw SchemaError("dimension: expected an integer");
    p.dimension = doc["dimension"].get<int>();
    if (p.dimension < 2 || p.dimension % 2 != 0)
        throw SchemaError("dimension: must be a positive even integer");

    if (doc.contains("tolerance")) {
        const auto& t = doc["tolerance"];
        if (!t.is_object()) throw SchemaError("tolerance: expected an object");
        if (t.contains("rel")) p.tol.rel_eps = t["rel"].get<double>();
        if (t.contains("abs")) p.tol.abs_eps = t["abs"].get<double>();
        if (!(p.tol.rel_eps > 0.0) || p.tol.abs_eps < 0.0)
            throw SchemaError("tolerance: rel must be > 0 and abs >= 0");
    }

    BilinearFormMatrix form = hyperbolic_form(p.dimension / 2, p.epsilon);
    if (doc.contains("form")) {
        Eigen::MatrixXd m = parse_matrix(doc["form"], "form");
        if (m.rows() != p.dimension || m.cols() != p.dimension)
            throw SchemaError("form: must be dimension x dimension");
        form = BilinearFormMatrix(p.epsilon, std::move(m), p.tol);
    }
    p.space = std::make_shared<EpsSpace>(std::move(form), p.tol);

    if (doc.contains("lagrangians")) {
        if (!doc["lagrangians"].is_object())
            throw SchemaError("lagrangians: expected an object of matrices");
        for (const auto& [name, value] : doc["lagrangians"].items()) {
            Eigen::MatrixXd raw =
                parse_matrix(value, "lagrangians." + name);
            if (raw.rows() != p.dimension)
                throw WrongDimension("lagrangians." + name + ": expected " +
                                     std::to_string(p.dimension) + " rows");
            if (raw.cols() != p.dimension / 2)
                throw WrongDimension("lagrangians." + name + ": expected " +
                                     std::to_string(p.dimension / 2) +
                                     " columns");
            Lagrangian l = validate_lagrangian(
                p.space, canonicalize(raw, p.tol), p.tol);
            p.raw_lagrangians.emplace(name, std::move(raw));
            p.lagrangians.emplace(name, std::move(l));
        }
    }

    if (doc.contains("loops")) {
        if (!doc["loops"].is_object())
            throw SchemaError("loops: expected an object of sample lists");
        for (const auto& [name, value] : doc["loops"].items()) {
            if (!value.is_array() || value.size() < 3)
                throw SchemaError("loops." + name +
                                  ": expected an array of at least 3 matrices");
            std::vector<double> thetas;
            std::vector<Subspace> samples;
            const std::size_t count = value.size();
            for (std::size_t i = 0; i < count; ++i) {
                Eigen::MatrixXd raw = parse_matrix(
                    value[i], "loops." + name + "[" + std::to_string(i) + "]");
                if (raw.rows() != p.dimension)
                    throw WrongDimension("loops." + name + "[" +
                                         std::to_string(i) + "]: expected " +
                                         std::to_string(p.dimension) + " rows");
                thetas.push_back(static_cast<double>(i) / (count - 1));
                samples.push_back(canonicalize(raw, p.tol));
            }
            p.loops.emplace(name,
                            LagrangianLoop(p.space, std::move(thetas),
                                           std::move(samples), p.tol));
        }
    }
    return p;
}

std::string run_command(const std::string& command, const ProblemFile& p,
                        const RunOptions& options) {
    json report;
    report["schema_version"] = 1;
    report["command"] = command;

    if (command == "validate") {
        report["epsilon"] = p.epsilon;
        report["dimension"] = p.dimension;
        json lags = json::object();
        for (const auto& [name, l] : p.lagrangians) {
            json entry;
            entry["dimension"] = l.subspace.dim();
            entry["isotropy_residual"] = l.isotropy_residual;
            lags[name] = std::move(entry);
        }
        report["lagrangians"] = std::move(lags);
        json loops = json::object();
        for (const auto& [name, loop] : p.loops) {
            json entry;
            entry["samples"] = loop.samples().size();
            entry["closed"] = true;
            loops[name] = std::move(entry);
        }
        report["loops"] = std::move(loops);
    } else if (command == "transversal") {
        std::vector<std::pair<std::string, std::string>> pairs;
        if (options.pair.size() == 2) {
            pairs.emplace_back(options.pair[0], options.pair[1]);
        } else if (!options.pair.empty()) {
            throw InvalidArgument("--pair needs exactly two names");
        } else {
            for (auto a = p.lagrangians.begin(); a != p.lagrangians.end(); ++a)
                for (auto b = std::next(a); b != p.lagrangians.end(); ++b)
                    pairs.emplace_back(a->first, b->first);
        }
        json out = json::array();
        for (const auto& [a, b] : pairs) {
            json entry;
            entry["pair"] = {a, b};
            entry["transversal"] = are_transversal(
                named_lagrangian(p, a), named_lagrangian(p, b), p.tol);
            out.push_back(std::move(entry));
        }
        report["pairs"] = std::move(out);
    } else if (command == "kashiwara" || command == "lk") {
        const auto names = resolve_triple(p, options);
        const Lagrangian& l1 = named_lagrangian(p, names[0]);
        const Lagrangian& l2 = named_lagrangian(p, names[1]);
        const Lagrangian& l3 = named_lagrangian(p, names[2]);
        report["triple"] = {names[0], names[1], names[2]};
        const TransversalityReport crit =
            transversality_criterion(p.space, l1, l2, l3, p.tol);
        if (crit.pairwise_transversal != crit.form_nondegenerate)
            throw ContractViolation(
                "transversality and nondegeneracy of Psi disagree");
        if (command == "lk") {
            const LKClass cls = lk_invariant(p.space, l1, l2, l3, p.tol);
            report["rank_delta"] = cls.rank_delta;
            report["signature"] = cls.signature;
        } else {
            // The reported matrix uses the raw input bases so that the
            // entries match the fixtures users wrote down.
            const KashiwaraForm kf = kashiwara_bilinear(
                p.space, p.raw_lagrangians.at(names[0]),
                p.raw_lagrangians.at(names[1]), p.raw_lagrangians.at(names[2]),
                p.tol);
            const Signature sig = signature(kf.matrix, p.tol);
            report["matrix"] = matrix_to_json(kf.matrix.entries());
            report["rank"] = sig.rank();
            report["signature"] = sig.index();
            report["triple_index"] = sig.index();
            report["pairwise_transversal"] = crit.pairwise_transversal;
            report["form_nondegenerate"] = crit.form_nondegenerate;
            if (crit.witness) {
                const int np = p.space->half_dim();
                const auto& w = *crit.witness;
                // express the witness in the raw bases
                Eigen::VectorXd coords = Eigen::VectorXd::Zero(3 * np);
                for (int slot : {w.pair_first, w.pair_second}) {
                    const Eigen::MatrixXd& raw =
                        p.raw_lagrangians.at(names[slot - 1]);
                    coords.segment((slot - 1) * np, np) =
                        raw.colPivHouseholderQr().solve(w.carrier);
                }
                json witness;
                witness["pair"] = {w.pair_first, w.pair_second};
                witness["vector"] = vector_to_json(coords);
                witness["carrier"] = vector_to_json(w.carrier);
                report["witness"] = std::move(witness);
            } else {
                report["witness"] = nullptr;
            }
        }
    } else if (command == "deform") {
        if (options.pair.size() != 2)
            throw InvalidArgument("deform needs --pair A,B");
        const Lagrangian& l1 = named_lagrangian(p, options.pair[0]);
        const Lagrangian& l2 = named_lagrangian(p, options.pair[1]);
        const LagrangianPath path =
            make_transversal_pair(p.space, l1, l2, options.steps, p.tol);
        report["pair"] = {options.pair[0], options.pair[1]};
        report["steps"] = options.steps;
        json samples = json::array();
        for (std::size_t i = 0; i < path.ts().size(); ++i) {
            json entry;
            entry["t"] = path.ts()[i];
            entry["basis"] = matrix_to_json(path.samples()[i].subspace.basis());
            entry["isotropy_residual"] = path.samples()[i].isotropy_residual;
            samples.push_back(std::move(entry));
        }
        report["samples"] = std::move(samples);
        report["endpoint_transversal"] =
            are_transversal(l1, path.end(), p.tol);
    } else if (command == "loop-index") {
        std::string name = options.loop;
        if (name.empty()) {
            if (p.loops.size() == 1)
                name = p.loops.begin()->first;
            else
                throw InvalidArgument("loop-index needs --loop NAME");
        }
        auto it = p.loops.find(name);
        if (it == p.loops.end())
            throw UnknownName("unknown loop \"" + name + "\"");
        report["loop"] = name;
        report["index"] = loop_maslov_index(it->second, p.tol);
    } else {
        throw InvalidArgument("unknown command \"" + command + "\"");
    }
    return report.dump(2) + "\n";
}

} // namespace lagr
