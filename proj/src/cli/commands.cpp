#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "centorb/centralizer.hpp"
#include "centorb/classify.hpp"
#include "centorb/cli.hpp"
#include "centorb/counting.hpp"
#include "centorb/error.hpp"
#include "centorb/lattice.hpp"
#include "centorb/oracle.hpp"

namespace centorb::cli {

namespace {

/// Machine integers stay numbers; anything wider is emitted as a decimal string.
Json big(const Integer& n) {
    if (n.fits_slong_p()) return Json(n.get_si());
    return Json(n.get_str());
}

Json polynomial_json(const IntPolynomial& f) {
    Json c = Json::array();
    for (const auto& x : f.coefficients()) c.push_back(big(x));
    return c;
}

Json label_heights_json(const OrbitLattice& lattice, const OrbitReport& report) {
    Json out = Json::array();
    for (std::size_t e = 0; e < report.heights.size(); ++e)
        out.push_back(Json{{"eigenvalue", lattice.increments()[e].eigenvalue.str()}, {"heights", report.heights[e]}});
    return out;
}

Json vector_json(const Matrix& v) {
    Json out = Json::array();
    for (std::size_t i = 0; i < v.rows(); ++i) out.push_back(to_string(v[i]));
    return out;
}

const Matrix& require_matrix(const OperatorSpec& spec, const char* command) {
    if (!spec.matrix)
        throw InputError(std::string(command) +
                         " needs a \"matrix\" spec: vectors are coordinates in a concrete basis, which a Jordan type "
                         "alone does not fix");
    return *spec.matrix;
}

void check_vector(const Matrix& v, std::size_t n, const char* name) {
    if (v.rows() != n)
        throw InputError(std::string(name) + " has " + std::to_string(v.rows()) + " entries, operator dimension is " +
                         std::to_string(n));
}

std::string relation(const OrbitLattice& lattice, const OrbitLabel& a, const OrbitLabel& b) {
    if (a == b) return "=";
    if (lattice.leq(a, b)) return "<";
    if (lattice.leq(b, a)) return ">";
    return "incomparable";
}

std::string dot_quote(const std::string& s) { return "\"" + s + "\""; }

std::string read_all(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw InputError("cannot open operator spec file \"" + path + "\"");
        buf << file.rdbuf();
    }
    return buf.str();
}

}  // namespace

Json analyze(const OperatorSpec& spec) {
    Json out;
    out["dimension"] = spec.type.dimension();
    out["jordan_type"] = jordan_type_json(spec.type);
    Json eig = Json::array();
    for (const auto& inc : increments_from_type(spec.type)) {
        eig.push_back(Json{{"eigenvalue", inc.eigenvalue.str()},
                           {"sizes", inc.sizes},
                           {"increments", inc.deltas},
                           {"multiplicities", inc.multiplicities},
                           {"tail_sums", inc.tail_sums},
                           {"gen_function", polynomial_json(gen_function_eigenvalue(inc))}});
    }
    out["eigenvalues"] = std::move(eig);
    out["centralizer_dimension"] = centralizer_dimension(spec.type);
    out["orbit_count"] = big(orbit_count(spec.type));
    const auto f = gen_function(spec.type);
    out["gen_function"] = polynomial_json(f);
    out["gen_function_text"] = f.str();
    return out;
}

Json lattice_json(const JordanType& type, std::size_t cap) {
    const OrbitLattice lattice(type);
    Json nodes = Json::array();
    for (const auto& l : lattice.enumerate(cap))
        nodes.push_back(Json::array({lattice.format(l), orbit_dimension(lattice, l)}));
    Json covers = Json::array();
    for (const auto& c : lattice.hasse_covers(cap))
        covers.push_back(Json::array({lattice.format(c.lower), lattice.format(c.upper)}));
    return Json{{"nodes", std::move(nodes)}, {"covers", std::move(covers)}};
}

std::string lattice_dot(const JordanType& type, std::size_t cap) {
    const OrbitLattice lattice(type);
    std::ostringstream os;
    os << "digraph orbits {\n  rankdir=BT;\n";
    for (const auto& l : lattice.enumerate(cap))
        os << "  " << dot_quote(lattice.format(l)) << " [dim=" << orbit_dimension(lattice, l) << "];\n";
    for (const auto& c : lattice.hasse_covers(cap))
        os << "  " << dot_quote(lattice.format(c.lower)) << " -> " << dot_quote(lattice.format(c.upper)) << ";\n";
    os << "}\n";
    return os.str();
}

Json classify(const OperatorSpec& spec, const Matrix& v) {
    const Matrix& t = require_matrix(spec, "classify");
    check_vector(v, t.rows(), "--vector");
    const auto basis = jordan_basis(t);
    const OrbitLattice lattice(basis.type);
    const auto report = classify_vector(basis, v);
    Json out;
    out["label"] = lattice.format(report.label);
    out["orbit_dimension"] = report.orbit_dimension;
    out["closure_dimension"] = report.closure_dimension;
    out["heights"] = label_heights_json(lattice, report);
    out["jordan_coordinates"] = vector_json(coords_in_jordan_basis(basis, v));
    out["is_bottom"] = report.label == lattice.bottom();
    out["is_top"] = report.label == lattice.top();
    out["bottom"] = lattice.format(lattice.bottom());
    out["top"] = lattice.format(lattice.top());
    return out;
}

Json compare(const OperatorSpec& spec, const Matrix& v1, const std::optional<Matrix>& v2, std::uint64_t seed) {
    const Matrix& t = require_matrix(spec, "compare");
    check_vector(v1, t.rows(), "first --vector");
    const auto basis = jordan_basis(t);
    Json out;
    Matrix second;
    if (v2) {
        check_vector(*v2, t.rows(), "second --vector");
        second = *v2;
    } else {
        const auto cb = centralizer_basis(basis);
        second = sample_invertible(cb, seed) * v1;
        out["transform_seed"] = seed;
        out["vector2"] = vector_json(second);
    }
    const OrbitLattice lattice(basis.type);
    const auto cmp = same_solution_class(basis, v1, second);
    out["equivalent"] = cmp.equivalent;
    out["label1"] = lattice.format(cmp.first.label);
    out["label2"] = lattice.format(cmp.second.label);
    out["dimension1"] = cmp.first.orbit_dimension;
    out["dimension2"] = cmp.second.orbit_dimension;
    out["comparable"] = relation(lattice, cmp.first.label, cmp.second.label);
    return out;
}

Json verify(const OperatorSpec& spec, std::uint32_t prime, std::size_t cap) {
    const auto v = oracle::compare_with_prediction(spec.type, prime, cap);
    Json out;
    out["pass"] = v.pass;
    out["prime"] = v.prime;
    out["dimension"] = v.dimension;
    out["subspaces_scanned"] = v.subspaces_scanned;
    out["invariant_subspaces"] = v.invariant_count;
    out["predicted_labels"] = v.predicted_count;
    out["commutant_dimension"] = v.commutant_dimension;
    out["centralizer_dimension"] = v.centralizer_dimension;
    out["dimension_histogram"] = v.invariant_dimensions;
    out["gen_function"] = polynomial_json(gen_function(spec.type));
    out["mismatch"] = v.first_mismatch ? Json(*v.first_mismatch) : Json(nullptr);
    return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Centralizer orbit classification for linear operators"};
    app.name("centorb");
    app.require_subcommand(1);

    std::string spec_path = "-";
    std::string format = "json";
    std::uint64_t seed = 1;
    std::size_t cap = 0;
    std::uint32_t prime = 2;
    std::vector<std::string> vectors;

    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("spec", spec_path, "Operator spec JSON file, or - for stdin")->capture_default_str();
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "Jordan type, centralizer dimension and orbit counts");
    add_spec(analyze_cmd);

    auto* lattice_cmd = app.add_subcommand("lattice", "Orbit lattice with its Hasse diagram");
    add_spec(lattice_cmd);
    lattice_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
    lattice_cmd->add_option("--cap", cap, "Maximum number of labels to enumerate (default 1000000)");

    auto* classify_cmd = app.add_subcommand("classify", "Orbit of a vector (initial condition)");
    add_spec(classify_cmd);
    classify_cmd->add_option("--vector", vectors, "Comma-separated rational coordinates")->required()->expected(1);

    auto* compare_cmd = app.add_subcommand("compare", "Whether two initial conditions give equivalent solutions");
    add_spec(compare_cmd);
    compare_cmd->add_option("--vector", vectors, "Comma-separated rational coordinates; give one or two")
        ->required()
        ->expected(1, 2)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    compare_cmd->add_option("--seed", seed, "With a single --vector, compare it against U v for U sampled from C(T)")
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Brute-force check of the orbit lattice over a prime field");
    add_spec(verify_cmd);
    verify_cmd->add_option("--prime", prime, "Field size")->capture_default_str();
    verify_cmd->add_option("--cap", cap, "Maximum number of subspaces to scan (default 100000)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        const OperatorSpec spec = parse_operator_spec_text(read_all(spec_path, in));
        if (*analyze_cmd) {
            out << analyze(spec).dump(2) << "\n";
        } else if (*lattice_cmd) {
            const std::size_t c = cap ? cap : kDefaultEnumerationCap;
            if (format == "dot")
                out << lattice_dot(spec.type, c);
            else
                out << lattice_json(spec.type, c).dump(2) << "\n";
        } else if (*classify_cmd) {
            out << classify(spec, parse_vector(vectors.at(0))).dump(2) << "\n";
        } else if (*compare_cmd) {
            std::optional<Matrix> second;
            if (vectors.size() == 2) second = parse_vector(vectors[1]);
            out << compare(spec, parse_vector(vectors.at(0)), second, seed).dump(2) << "\n";
        } else if (*verify_cmd) {
            const Json report = verify(spec, prime, cap ? cap : oracle::kDefaultSubspaceCap);
            out << report.dump(2) << "\n";
            return report["pass"].get<bool>() ? kOk : kVerificationFailed;
        }
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const NonSplittingCharPoly& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {  // InputError, DimensionError, InvalidLabel
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}

}  // namespace centorb::cli
