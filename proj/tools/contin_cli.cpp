#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "contin/blaschke.hpp"
#include "contin/continuation.hpp"
#include "contin/germ.hpp"
#include "contin/io_json.hpp"
#include "contin/lacunary.hpp"
#include "contin/laplace.hpp"
#include "contin/lewy.hpp"
#include "contin/path.hpp"
#include "contin/rng.hpp"
#include "contin/types.hpp"

using namespace contin;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::DomainViolation, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    std::string body = text;
    if (body.empty() || body.back() != '\n') body += '\n';
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::DomainViolation, "cannot write " + out_path);
    out << body;
}

Cx parse_complex(const std::string& text) {
    auto comma = text.find(',');
    char* end = nullptr;
    std::string re_s = text.substr(0, comma);
    double re = std::strtod(re_s.c_str(), &end);
    if (end == re_s.c_str() || *end != '\0')
        throw Error(ErrorCode::DomainViolation, "bad complex '" + text + "'");
    double im = 0.0;
    if (comma != std::string::npos) {
        std::string im_s = text.substr(comma + 1);
        im = std::strtod(im_s.c_str(), &end);
        if (end == im_s.c_str() || *end != '\0')
            throw Error(ErrorCode::DomainViolation, "bad complex '" + text + "'");
    }
    return {re, im};
}

struct GermOpts {
    std::string name;
    std::string file;
    int order = 64;
};

void add_germ_opts(CLI::App* cmd, GermOpts& g) {
    cmd->add_option("--germ", g.name,
                    "named germ: recip_two_minus_z, recip_two_minus_z_at_i, "
                    "sqrt_at_one, lacunary, log_at_one");
    cmd->add_option("--germ-file", g.file, "germ as JSON file");
    cmd->add_option("--order", g.order, "construction order for --germ")
        ->default_val(64);
}

Germ resolve_germ(const GermOpts& g) {
    if (!g.name.empty() && !g.file.empty())
        throw Error(ErrorCode::DomainViolation,
                    "--germ and --germ-file are exclusive");
    if (!g.file.empty()) return germ_from_json(slurp(g.file));
    if (!g.name.empty()) return make_named_germ(g.name, g.order);
    throw Error(ErrorCode::DomainViolation, "need --germ or --germ-file");
}

struct PathOpts {
    std::string text;
    std::string file;
    std::string loop;
    int turns = 1;
};

void add_path_opts(CLI::App* cmd, PathOpts& p, bool with_loop) {
    cmd->add_option("--path", p.text,
                    "path string, e.g. line:0,0:2,0;arc:0,0,1,0,3.14");
    cmd->add_option("--path-file", p.file, "path as JSON file");
    if (with_loop) {
        cmd->add_option("--loop", p.loop, "named loop: unit-circle");
        cmd->add_option("--turns", p.turns, "loop turns")->default_val(1);
    }
}

PathSpec resolve_path(const PathOpts& p, Cx center) {
    int given = (!p.text.empty()) + (!p.file.empty()) + (!p.loop.empty());
    if (given != 1)
        throw Error(ErrorCode::DomainViolation,
                    "need exactly one of --path, --path-file, --loop");
    if (!p.text.empty()) return parse_path_string(p.text);
    if (!p.file.empty()) return path_from_json(slurp(p.file));
    if (p.loop != "unit-circle")
        throw Error(ErrorCode::DomainViolation, "unknown loop '" + p.loop + "'");
    return unit_circle_loop(center, p.turns);
}

struct PolicyOpts {
    StepPolicy policy;
};

void add_policy_opts(CLI::App* cmd, PolicyOpts& p) {
    cmd->add_option("--step-fraction", p.policy.step_fraction)->default_val(0.4);
    cmd->add_option("--min-step", p.policy.min_step)->default_val(1e-6);
    cmd->add_option("--policy-order", p.policy.order)->default_val(64);
    cmd->add_option("--overlap-tol", p.policy.overlap_tol)->default_val(1e-8);
}

std::string step_points_csv(const ContinuationTrace& t) {
    std::string csv = "index,re,im\n";
    for (std::size_t i = 0; i < t.step_points.size(); ++i) {
        csv += std::to_string(i) + "," + format_double(t.step_points[i].real()) +
               "," + format_double(t.step_points[i].imag()) + "\n";
    }
    return csv;
}

int run_continue(const GermOpts& go, const PathOpts& po, const PolicyOpts& pl,
                 const std::string& out, const std::string& csv) {
    Germ g = resolve_germ(go);
    PathSpec path = resolve_path(po, g.center);
    ContinuationTrace t = continue_along_path(g, path, pl.policy);
    emit(trace_to_json(t), out);
    if (!csv.empty()) emit(step_points_csv(t), csv);
    return 0;  // a stall is a finding, not a failure
}

int run_monodromy(const GermOpts& go, const PathOpts& po, const PolicyOpts& pl,
                  const std::string& out, const std::string& csv) {
    Germ g = resolve_germ(go);
    PathSpec loop = resolve_path(po, g.center);
    MonodromyReport rep = monodromy_loop(g, loop, pl.policy);
    emit(monodromy_to_json(rep), out);
    if (!csv.empty()) emit(step_points_csv(rep.trace), csv);
    return 0;
}

int run_boundary_probe(int depth, int m_max, int samples, std::uint64_t seed,
                       const std::string& out, const std::string& csv) {
    std::vector<RadialProbeReport> reports = boundary_scan(depth, m_max);

    // seeded functional-equation residual |h(z) - z^2 - h(z^2)| on |z| <= 0.7
    SplitMix64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        double r = 0.7 * std::sqrt(rng.next_double());
        double a = 2.0 * kPi * rng.next_double();
        Cx z = std::polar(r, a);
        double res = std::abs(lacunary_eval(z) - z * z - lacunary_eval(z * z));
        if (res > worst) worst = res;
    }

    JsonWriter w;
    w.begin_object();
    w.key("reports");
    w.begin_array();
    for (const RadialProbeReport& rep : reports) {
        w.begin_object();
        w.key("k");
        w.value_int(static_cast<long long>(rep.k));
        w.key("m");
        w.value_int(rep.m);
        w.key("direction");
        w.value_complex(rep.direction);
        w.key("radii");
        w.begin_array();
        for (double r : rep.radii) w.value_number(r);
        w.end_array();
        w.key("values");
        w.begin_array();
        for (Cx v : rep.values) w.value_complex(v);
        w.end_array();
        w.key("growth_slope");
        w.value_number(rep.growth_slope);
        w.key("blow_up_detected");
        w.value_bool(rep.blow_up_detected);
        w.end_object();
    }
    w.end_array();
    w.key("functional_equation");
    w.begin_object();
    w.key("samples");
    w.value_int(samples);
    w.key("seed");
    w.value_int(static_cast<long long>(seed));
    w.key("worst_residual");
    w.value_number(worst);
    w.end_object();
    w.end_object();
    emit(w.take(), out);

    if (!csv.empty()) {
        std::string rows = "k,m,j,r,abs_h,slope,flag\n";
        for (const RadialProbeReport& rep : reports) {
            for (std::size_t i = 0; i < rep.radii.size(); ++i) {
                rows += std::to_string(rep.k) + "," + std::to_string(rep.m) +
                        "," + std::to_string(i + 4) + "," +
                        format_double(rep.radii[i]) + "," +
                        format_double(std::abs(rep.values[i])) + "," +
                        format_double(rep.growth_slope) + "," +
                        (rep.blow_up_detected ? "1" : "0") + "\n";
            }
        }
        emit(rows, csv);
    }
    return 0;
}

int run_lewy_verify(Cx z, int steps, const std::string& out,
                    const std::string& csv) {
    QuadratureSpec spec;
    std::vector<SectorEvaluation> sectors = lewy_continue_loop(z, steps, spec);
    Cx loop_value = sectors.back().value;
    Cx direct = lewy_derivative_direct(z, spec).value;
    double rel = std::abs(loop_value - direct) / std::abs(direct);

    JsonWriter w;
    w.begin_object();
    w.key("z");
    w.value_complex(z);
    w.key("loop_value");
    w.value_complex(loop_value);
    w.key("derivative_direct");
    w.value_complex(direct);
    w.key("rel_error");
    w.value_number(rel);
    w.key("sectors");
    w.begin_array();
    for (const SectorEvaluation& s : sectors) {
        w.begin_object();
        w.key("theta");
        w.value_number(s.theta);
        w.key("value");
        w.value_complex(s.value);
        w.key("est_error");
        w.value_number(s.est_error);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    emit(w.take(), out);

    if (!csv.empty()) {
        std::string rows = "theta,re,im,est_error\n";
        for (const SectorEvaluation& s : sectors)
            rows += format_double(s.theta) + "," +
                    format_double(s.value.real()) + "," +
                    format_double(s.value.imag()) + "," +
                    format_double(s.est_error) + "\n";
        emit(rows, csv);
    }
    return 0;
}

int run_laplace_verify(double half_extent, int nodes, const std::string& out,
                       const std::string& csv) {
    ContourSpec c;
    c.half_extent = half_extent;
    c.nodes = nodes;
    std::vector<Cx> grid;
    for (double re : {0.0, 0.25, 0.5, 0.75, 1.0})
        for (double im : {-0.5, -0.25, 0.0, 0.25, 0.5})
            grid.push_back({re, im});
    std::vector<FunctionalEqReport> reports = verify_functional_equation(grid, c);
    double max_residual = 0.0;
    for (const FunctionalEqReport& r : reports)
        if (r.rel_residual > max_residual) max_residual = r.rel_residual;

    JsonWriter w;
    w.begin_object();
    w.key("max_residual");
    w.value_number(max_residual);
    w.key("grid");
    w.begin_array();
    for (const FunctionalEqReport& r : reports) {
        w.begin_object();
        w.key("z");
        w.value_complex(r.z);
        w.key("lhs");
        w.value_complex(r.lhs);
        w.key("rhs");
        w.value_complex(r.rhs);
        w.key("rel_residual");
        w.value_number(r.rel_residual);
        w.end_object();
    }
    w.end_array();
    w.key("contour");
    w.begin_object();
    w.key("base");
    w.value_complex(c.base);
    w.key("direction");
    w.value_complex(c.direction);
    w.key("half_extent");
    w.value_number(c.half_extent);
    w.key("nodes");
    w.value_int(c.nodes);
    w.end_object();
    w.end_object();
    emit(w.take(), out);

    if (!csv.empty()) {
        std::string rows = "re_z,im_z,rel_residual\n";
        for (const FunctionalEqReport& r : reports)
            rows += format_double(r.z.real()) + "," +
                    format_double(r.z.imag()) + "," +
                    format_double(r.rel_residual) + "\n";
        emit(rows, csv);
    }
    return 0;
}

int run_blaschke_demo(int pairs, double angle_step, int order,
                      const std::string& out, const std::string& csv) {
    std::vector<KoebeReport> reports =
        covering_failure_demo(pairs, order, angle_step);

    JsonWriter w;
    w.begin_object();
    w.key("n_pairs");
    w.value_int(pairs);
    w.key("angle_step");
    w.value_number(angle_step);
    w.key("order");
    w.value_int(order);
    w.key("reports");
    w.begin_array();
    for (const KoebeReport& r : reports) {
        w.begin_object();
        w.key("n");
        w.value_int(static_cast<long long>(r.n));
        w.key("a_n");
        w.value_complex(r.a_n);
        w.key("deriv_B");
        w.value_complex(r.deriv_B);
        w.key("deriv_f");
        w.value_complex(r.deriv_f);
        w.key("gap");
        w.value_number(r.gap);
        w.key("r_n");
        w.value_number(r.r_n);
        w.key("bound_4_gap");
        w.value_number(r.bound_4_gap);
        w.key("bound_shrink");
        w.value_number(r.bound_shrink);
        w.key("passes_tri2");
        w.value_bool(r.passes_tri2);
        w.key("passes_quatre2");
        w.value_bool(r.passes_quatre2);
        w.key("koebe_quarter_ok");
        w.value_bool(r.koebe_quarter_ok);
        w.key("excludes_partner");
        w.value_bool(r.excludes_partner);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    emit(w.take(), out);

    if (!csv.empty()) {
        std::string rows = "n,abs_a2n,gap,r_2n,bound,pass_tri2,pass_quatre2\n";
        for (const KoebeReport& r : reports)
            rows += std::to_string(r.n / 2) + "," +
                    format_double(std::abs(r.a_n)) + "," +
                    format_double(r.gap) + "," + format_double(r.r_n) + "," +
                    format_double(r.bound_shrink) + "," +
                    (r.passes_tri2 ? "1" : "0") + "," +
                    (r.passes_quatre2 ? "1" : "0") + "\n";
        emit(rows, csv);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analytic continuation toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global --out/--emit-csv/--seed after the subcommand

    std::string out, csv;
    std::uint64_t seed = 42;
    app.add_option("--out", out, "write the JSON report here (default stdout)");
    app.add_option("--emit-csv", csv, "also write a plot-ready CSV here");
    app.add_option("--seed", seed, "seed for pseudo-random sampling")
        ->default_val(42);

    auto* c_cont = app.add_subcommand("continue", "continue a germ along a path");
    GermOpts cont_germ;
    PathOpts cont_path;
    PolicyOpts cont_policy;
    add_germ_opts(c_cont, cont_germ);
    add_path_opts(c_cont, cont_path, false);
    add_policy_opts(c_cont, cont_policy);

    auto* c_mono = app.add_subcommand("monodromy", "continue around a closed loop");
    GermOpts mono_germ;
    PathOpts mono_path;
    PolicyOpts mono_policy;
    add_germ_opts(c_mono, mono_germ);
    add_path_opts(c_mono, mono_path, true);
    add_policy_opts(c_mono, mono_policy);

    auto* c_probe = app.add_subcommand(
        "boundary-probe", "radial blow-up probes of the lacunary series");
    int depth = 3, m_max = 40, samples = 200;
    c_probe->add_option("--depth", depth, "2^depth dyadic directions")
        ->default_val(3);
    c_probe->add_option("--m-max", m_max, "finest radius 1 - 2^-m_max")
        ->default_val(40);
    c_probe->add_option("--samples", samples,
                        "seeded functional-equation samples")
        ->default_val(200);

    auto* c_lewy = app.add_subcommand("lewy-verify",
                                      "loop continuation returns h'");
    std::string z_text = "1";
    int steps = 8;
    c_lewy->add_option("--z", z_text, "base point, re or re,im")
        ->default_val("1");
    c_lewy->add_option("--steps", steps, "loop sectors")->default_val(8);

    auto* c_lap = app.add_subcommand("laplace-verify",
                                     "functional equation on the 5x5 grid");
    double half_extent = 6.0;
    int nodes = 2049;
    c_lap->add_option("--half-extent", half_extent)->default_val(6.0);
    c_lap->add_option("--nodes", nodes)->default_val(2049);

    auto* c_bla = app.add_subcommand("blaschke-demo",
                                     "shrinking inverse-radius ladder");
    int pairs = 8, border = 48;
    double angle_step = 0.3;
    c_bla->add_option("--pairs", pairs)->default_val(8);
    c_bla->add_option("--angle-step", angle_step)->default_val(0.3);
    c_bla->add_option("--order", border)->default_val(48);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_cont->parsed())
            return run_continue(cont_germ, cont_path, cont_policy, out, csv);
        if (c_mono->parsed())
            return run_monodromy(mono_germ, mono_path, mono_policy, out, csv);
        if (c_probe->parsed())
            return run_boundary_probe(depth, m_max, samples, seed, out, csv);
        if (c_lewy->parsed())
            return run_lewy_verify(parse_complex(z_text), steps, out, csv);
        if (c_lap->parsed())
            return run_laplace_verify(half_extent, nodes, out, csv);
        if (c_bla->parsed())
            return run_blaschke_demo(pairs, angle_step, border, out, csv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";  // what() carries the code name
        return is_validation_error(e.code()) ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
