// Command line front end: exact constructions with replayable traces, ratio
// evaluation, the theorem check suites, and polygon presentations.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dap/construct.hpp"
#include "dap/dyck.hpp"
#include "dap/ratio.hpp"
#include "dap/suites.hpp"
#include "dap/svg.hpp"

namespace {

struct GlobalOptions {
    std::string field = "Q";
    std::string aux;
    std::string trace = "json";
    std::uint64_t seed = 42;
    std::size_t samples = 200;
    std::string out;
};

void emit(const GlobalOptions& options, const std::string& text) {
    if (options.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream file(options.out);
    if (!file) {
        dap::raise(dap::Errc::parse_error, "cannot open output file '" + options.out + "'");
    }
    file << text << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        dap::raise(dap::Errc::parse_error, "cannot read file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

dap::Point parse_aux(const dap::FieldSpec& spec, const std::string& text) {
    if (text.empty()) return dap::default_aux(spec);
    // the separating comma sits outside any coefficient list brackets
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '[') ++depth;
        if (text[i] == ']') --depth;
        if (text[i] == ',' && depth == 0) {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        dap::raise(dap::Errc::parse_error, "--aux expects 'x,y'");
    }
    return dap::Point{dap::Scalar::parse(spec, text.substr(0, split)),
                      dap::Scalar::parse(spec, text.substr(split + 1))};
}

void emit_geo(const GlobalOptions& options, const dap::GeoResult& geo) {
    if (options.trace == "none") {
        emit(options, geo.value.str());
        return;
    }
    std::string payload;
    if (options.trace == "svg") {
        if (geo.trace.field.kind() == dap::FieldKind::rationals) {
            payload = dap::render_trace_svg(geo.trace);
        } else {
            std::cerr << "warning: SVG output needs the rational backend; emitting JSON\n";
            payload = geo.trace.to_json(2);
        }
    } else {
        payload = geo.trace.to_json(2);
    }
    emit(options, payload);
    if (!options.out.empty()) {
        std::cout << geo.value.str() << "\n";
    }
}

int run_check(const GlobalOptions& options, const std::string& suite) {
    dap::suites::Options opt;
    opt.field = dap::FieldSpec::parse(options.field);
    opt.seed = options.seed;
    opt.samples = options.samples;
    dap::Report report = dap::suites::run(suite, opt);
    emit(options, report.to_json(2));
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    GlobalOptions options;

    CLI::App app{"exact incidence-geometry arithmetic on Desargues affine planes"};
    app.require_subcommand(1);
    app.add_option("--field", options.field, "field spec: Q, F:<p>, F:<p>^<k>, HQ")
        ->capture_default_str();
    app.add_option("--aux", options.aux, "auxiliary point 'x,y' (default 0,1)");
    app.add_option("--trace", options.trace, "trace output for constructions")
        ->check(CLI::IsMember({"json", "svg", "none"}))
        ->capture_default_str();
    app.add_option("--seed", options.seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--samples", options.samples, "sample count for randomized checks")
        ->capture_default_str();
    app.add_option("--out", options.out, "write primary output to this file");

    std::string lhs, rhs, third;

    auto* cmd_add = app.add_subcommand("add", "construct A + B on the base line");
    cmd_add->add_option("A", lhs)->required();
    cmd_add->add_option("B", rhs)->required();
    auto* cmd_mul = app.add_subcommand("mul", "construct A * B on the base line");
    cmd_mul->add_option("A", lhs)->required();
    cmd_mul->add_option("B", rhs)->required();
    auto* cmd_sub = app.add_subcommand("sub", "construct C - A on the base line");
    cmd_sub->add_option("C", lhs)->required();
    cmd_sub->add_option("A", rhs)->required();
    auto* cmd_ldiv = app.add_subcommand("ldiv", "construct B^-1 * A on the base line");
    cmd_ldiv->add_option("A", lhs)->required();
    cmd_ldiv->add_option("B", rhs)->required();

    auto* cmd_ratio2 = app.add_subcommand("ratio2", "two-point ratio r(A:B) = B^-1*A");
    cmd_ratio2->add_option("A", lhs)->required();
    cmd_ratio2->add_option("B", rhs)->required();
    auto* cmd_ratio3 =
        app.add_subcommand("ratio3", "three-point ratio r(A,B;C) = (B-C)^-1*(A-C)");
    cmd_ratio3->add_option("A", lhs)->required();
    cmd_ratio3->add_option("B", rhs)->required();
    cmd_ratio3->add_option("C", third)->required();
    auto* cmd_lineq = app.add_subcommand("lineq", "line equation coefficients M, N through B, C");
    cmd_lineq->add_option("B", lhs)->required();
    cmd_lineq->add_option("C", rhs)->required();
    auto* cmd_midpoint = app.add_subcommand("midpoint", "solve C + C = A + B");
    cmd_midpoint->add_option("A", lhs)->required();
    cmd_midpoint->add_option("B", rhs)->required();

    std::string suite;
    auto* cmd_check = app.add_subcommand("check", "run a verification suite");
    cmd_check->add_option("suite", suite, "which suite")
        ->required()
        ->check(CLI::IsMember(
            {"axioms", "desargues", "ratio2", "ratio3", "substructure", "preservation"}));

    auto* cmd_dyck = app.add_subcommand("dyck", "polygon complexes over collinear generators");
    cmd_dyck->require_subcommand(1);
    std::string dyck_file, dyck_vertex, dyck_from, dyck_to;
    auto* dyck_validate = cmd_dyck->add_subcommand("validate", "structural validation report");
    dyck_validate->add_option("file", dyck_file)->required();
    auto* dyck_present = cmd_dyck->add_subcommand("present", "generator word for a vertex");
    dyck_present->add_option("file", dyck_file)->required();
    dyck_present->add_option("vertex", dyck_vertex)->required();
    auto* dyck_reach = cmd_dyck->add_subcommand("reach", "shortest path from a generator");
    dyck_reach->add_option("file", dyck_file)->required();
    dyck_reach->add_option("from", dyck_from)->required();
    dyck_reach->add_option("to", dyck_to)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        dap::FieldSpec spec = dap::FieldSpec::parse(options.field);
        dap::Point aux = parse_aux(spec, options.aux);
        auto scalar = [&](const std::string& text) { return dap::Scalar::parse(spec, text); };

        if (cmd_add->parsed()) {
            emit_geo(options, dap::geo_add(scalar(lhs), scalar(rhs), aux));
        } else if (cmd_mul->parsed()) {
            emit_geo(options, dap::geo_mul(scalar(lhs), scalar(rhs), aux));
        } else if (cmd_sub->parsed()) {
            emit_geo(options, dap::geo_sub(scalar(lhs), scalar(rhs), aux));
        } else if (cmd_ldiv->parsed()) {
            emit_geo(options, dap::geo_left_div(scalar(lhs), scalar(rhs), aux));
        } else if (cmd_ratio2->parsed()) {
            emit(options, dap::ratio2(scalar(lhs), scalar(rhs)).str());
        } else if (cmd_ratio3->parsed()) {
            emit(options, dap::ratio3(scalar(lhs), scalar(rhs), scalar(third)).str());
        } else if (cmd_lineq->parsed()) {
            dap::LineEquation eq = dap::line_equation_coeffs(scalar(lhs), scalar(rhs));
            nlohmann::json out;
            out["M"] = eq.scale.str();
            out["N"] = eq.offset.str();
            emit(options, out.dump());
        } else if (cmd_midpoint->parsed()) {
            emit(options, dap::midpoint_solve(scalar(lhs), scalar(rhs)).str());
        } else if (cmd_check->parsed()) {
            return run_check(options, suite);
        } else if (dyck_validate->parsed()) {
            dap::Report report = dap::dyck::validate(dap::dyck::Polygon::from_json(read_file(dyck_file)));
            emit(options, report.to_json(2));
            return report.all_passed() ? 0 : 1;
        } else if (dyck_present->parsed()) {
            auto polygon = dap::dyck::Polygon::from_json(read_file(dyck_file));
            dap::dyck::GroupWord word = dap::dyck::present(polygon, dyck_vertex);
            nlohmann::json out;
            out["vertex"] = dyck_vertex;
            out["word"] = nlohmann::json::parse(word.to_json());
            out["path_measure"] = word.path_measure();
            emit(options, out.dump());
        } else if (dyck_reach->parsed()) {
            auto polygon = dap::dyck::Polygon::from_json(read_file(dyck_file));
            auto path = dap::dyck::reach(polygon, dyck_from, dyck_to);
            nlohmann::json out;
            out["path"] = path;
            out["length"] = path.size() - 1;
            emit(options, out.dump());
        }
        return 0;
    } catch (const dap::Error& e) {
        nlohmann::json err;
        err["error"] = std::string(dap::errc_name(e.code()));
        err["message"] = e.what();
        std::cout << err.dump() << "\n";
        return 1;
    }
}
