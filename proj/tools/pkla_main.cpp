// Command-line front end: construct / verify / curvature / classify / decide /
// extend workflows over JSON files, plus emission of the classification
// tables as golden data.  Exit codes: 0 success, 1 input-format (schema)
// error, 2 violated mathematical precondition; errors are reported as
// machine-readable JSON on stdout.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pkla/catalog.hpp"
#include "pkla/classify.hpp"
#include "pkla/json_io.hpp"

namespace {

using pkla::Json;

Json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw pkla::SchemaError("cannot open input file: " + path);
    Json j = Json::parse(f, nullptr, false);
    if (j.is_discarded()) throw pkla::SchemaError("input is not valid JSON: " + path);
    return j;
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(output);
        if (!f) throw pkla::SchemaError("cannot open output file: " + output);
        f << text;
    }
}

void emit(const Json& j, const std::string& output) { emit(j.dump(2) + "\n", output); }

Json run_construct(const Json& in) {
    pkla::FamilyInstance p = pkla::family_instance_from_json(in);
    pkla::PKStructure s = pkla::build_family(p);
    return Json{{"instance", pkla::family_instance_to_json(p)},
                {"structure", pkla::pk_structure_to_json(s)},
                {"algebra", pkla::lie_algebra_to_json(s.algebra())}};
}

Json run_verify(const Json& in) {
    pkla::LieAlgebra l = pkla::lie_algebra_from_json(pkla::detail::field(in, "algebra"));
    pkla::RMat j = pkla::matrix_from_json(pkla::detail::field(in, "J"));
    pkla::RMat g = pkla::matrix_from_json(pkla::detail::field(in, "g"));
    if (j.rows() != l.dim || j.cols() != l.dim || g.rows() != l.dim || g.cols() != l.dim)
        throw pkla::SchemaError("J and g must be square matrices of the algebra dimension");
    return pkla::pk_report_to_json(pkla::verify_pk(l, j, g));
}

Json run_curvature(const Json& in) {
    pkla::LieAlgebra l = pkla::lie_algebra_from_json(pkla::detail::field(in, "algebra"));
    pkla::RMat g = pkla::matrix_from_json(pkla::detail::field(in, "g"));
    if (g.rows() != l.dim || g.cols() != l.dim)
        throw pkla::SchemaError("g must be a square matrix of the algebra dimension");
    return pkla::curvature_report_to_json(l, g);
}

Json run_classify(const Json& in) {
    pkla::PKStructure s = pkla::pk_structure_from_json(in);
    pkla::FamilyInstance p = pkla::classify_instance(s);
    return Json{{"instance", pkla::family_instance_to_json(p)},
                {"canonical", pkla::family_instance_to_json(pkla::canonical_representative(p))}};
}

Json run_decide(const Json& in) {
    pkla::JordanType t;
    if (in.is_array()) {
        t = pkla::jordan_type_from_json(in);
    } else if (in.is_object() && in.contains("matrix")) {
        t = pkla::jordan_type(pkla::matrix_from_json(in.at("matrix")));
    } else {
        throw pkla::SchemaError("decide input must be a Jordan type array or {\"matrix\": ...}");
    }
    return pkla::decide_report_to_json(t);
}

Json run_extend(const Json& in) {
    pkla::FamilyInstance p =
        pkla::family_instance_from_json(in.is_object() && in.contains("instance") ? in.at("instance") : in);
    pkla::PKStructure s = pkla::build_family(p);
    pkla::RMat ddot(s.dim, s.dim);
    Json space_json;
    if (in.is_object() && in.contains("ddot")) {
        ddot = pkla::matrix_from_json(in.at("ddot"));
        if (ddot.rows() != s.dim || ddot.cols() != s.dim)
            throw pkla::SchemaError("ddot must be a square matrix of the base dimension");
    } else {
        pkla::ExtensionSpace sp = pkla::solve_extension_derivations(s);
        if (!sp.exists)
            throw pkla::InvalidDerivation("the base admits no extension derivation");
        ddot = sp.basepoint;
        Json dirs = Json::array();
        for (const pkla::RMat& d : sp.directions) dirs.push_back(pkla::matrix_to_json(d));
        space_json = Json{{"basepoint", pkla::matrix_to_json(sp.basepoint)}, {"directions", dirs}};
    }
    pkla::EinsteinExtension e = pkla::einstein_extend(s, ddot);
    Json out{{"derivation", pkla::matrix_to_json(ddot)}, {"extension", pkla::extension_to_json(e)}};
    if (!space_json.is_null()) out["solution_space"] = space_json;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for almost abelian pseudo-Kahler Lie algebras"};
    app.require_subcommand(1);

    std::string input, output;
    int dim = 6;
    std::string kase = "noniso";

    auto add_io = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) cmd->add_option("input", input, "input JSON file")->required();
        cmd->add_option("--output", output, "write JSON to this file instead of stdout");
    };
    add_io(app.add_subcommand("construct", "build the algebra and structure of a family instance"), true);
    add_io(app.add_subcommand("verify", "check the four structure axioms of {algebra, J, g}"), true);
    add_io(app.add_subcommand("curvature", "curvature report (flatness, Ricci, soliton) of {algebra, g}"), true);
    add_io(app.add_subcommand("classify", "match an adapted-basis {dim, D, J, g} against the family shapes"), true);
    add_io(app.add_subcommand("decide", "existence of complex/symplectic/pseudo-Kahler structures from a Jordan type"), true);
    add_io(app.add_subcommand("extend", "Einstein extension of a nilpotent family instance"), true);
    CLI::App* catalog = app.add_subcommand("catalog", "emit the exact classification tables");
    catalog->add_option("--dim", dim, "dimension (6 or 8)")->required();
    catalog->add_option("--case", kase, "iso or noniso")->required();
    add_io(catalog, false);

    CLI11_PARSE(app, argc, argv);
    std::string cmd = app.get_subcommands().front()->get_name();

    try {
        if (cmd == "catalog") {
            emit(pkla::catalog_text(dim, kase), output);
        } else {
            Json in = read_json(input);
            Json out;
            if (cmd == "construct")
                out = run_construct(in);
            else if (cmd == "verify")
                out = run_verify(in);
            else if (cmd == "curvature")
                out = run_curvature(in);
            else if (cmd == "classify")
                out = run_classify(in);
            else if (cmd == "decide")
                out = run_decide(in);
            else
                out = run_extend(in);
            emit(out, output);
        }
    } catch (const pkla::SchemaError& e) {
        std::cout << pkla::error_to_json("SchemaError", e.what()).dump(2) << "\n";
        return 1;
    } catch (const pkla::PreconditionError& e) {
        std::cout << pkla::error_to_json(e.code, e.what()).dump(2) << "\n";
        return 2;
    }
    return 0;
}
