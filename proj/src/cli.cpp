#include "shx/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "shx/diagnostics.hpp"
#include "shx/expression.hpp"
#include "shx/serialization.hpp"

namespace shx {

namespace {

struct RunConfig {
    double t = -1.0;
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
    int samples = 100;
    int maxdeg = 4;
    std::string region_arg;
    std::string output = "json";

    Scale scale() const { return Scale(t); }

    RegionSpec region() const {
        if (region_arg.empty()) return RegionSpec::unit_box();
        Json j;
        if (!region_arg.empty() && region_arg.front() == '{') {
            j = Json::parse(region_arg, nullptr, false);
        } else {
            std::ifstream in(region_arg);
            if (!in) throw ParseError("cannot open region file \"" + region_arg + "\"");
            std::ostringstream ss;
            ss << in.rdbuf();
            j = Json::parse(ss.str(), nullptr, false);
        }
        if (j.is_discarded()) throw ParseError("region: invalid JSON");
        return region_from_json(j);
    }

    SampleSet sample_set() const { return {region(), samples, seed}; }

    int degree_cap() const {
        if (const char* env = std::getenv("SHX_MAX_DEGREE")) {
            const int cap = std::atoi(env);
            if (cap < 1) throw ParseError("SHX_MAX_DEGREE must be a positive integer");
            return cap;
        }
        return kDefaultMaxDegree;
    }

    void validate() const {
        if (!(tolerance > 0.0)) throw ParseError("--tol must be > 0");
        if (samples < 1) throw ParseError("--samples must be >= 1");
        if (maxdeg < 1 || maxdeg > degree_cap())
            throw ParseError("--maxdeg must be in 1.." + std::to_string(degree_cap()));
    }
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--t", cfg.t, "ring scale t");
    cmd->add_option("--tol", cfg.tolerance, "tolerance");
    cmd->add_option("--seed", cfg.seed, "sampling seed");
    cmd->add_option("--samples", cfg.samples, "number of sample points");
    cmd->add_option("--maxdeg", cfg.maxdeg, "maximum expansion degree");
    cmd->add_option("--region", cfg.region_arg, "region spec (inline JSON or a file path)");
    cmd->add_option("--output", cfg.output, "output format: json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
}

Point4 parse_point(const std::string& text) {
    Point4 p{0, 0, 0, 0};
    std::istringstream ss(text);
    std::string item;
    int l = 0;
    while (std::getline(ss, item, ',')) {
        if (l >= 4) throw ParseError("--point wants exactly 4 comma-separated reals");
        try {
            p[static_cast<std::size_t>(l++)] = std::stod(item);
        } catch (const std::exception&) {
            throw ParseError("--point: bad real \"" + item + "\"");
        }
    }
    if (l != 4) throw ParseError("--point wants exactly 4 comma-separated reals");
    return p;
}

HFunction load_function(const RunConfig& cfg, const std::string& fn_arg) {
    if (is_builtin_name(fn_arg)) return parse_builtin(fn_arg, cfg.scale(), cfg.degree_cap());
    std::ifstream in(fn_arg);
    if (!in) throw ParseError("--fn: not a builtin and cannot open file \"" + fn_arg + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    Json j = Json::parse(ss.str(), nullptr, false);
    if (j.is_discarded()) throw ParseError("--fn: file \"" + fn_arg + "\" is not valid JSON");
    HFunction f = polynomial_from_json(j);
    require_same_scale(f.scale(), cfg.scale(), "--fn spec");
    return f;
}

std::string csv_coords(const Point4& x) {
    std::ostringstream os;
    os.precision(17);
    os << x[0] << "," << x[1] << "," << x[2] << "," << x[3];
    return os.str();
}

// ---- subcommands ----------------------------------------------------------

std::string cmd_table(const RunConfig& cfg) {
    const Scale scale = cfg.scale();
    const MulTable table = mul_table(scale);
    const SymbolicTable& sym = symbolic_mul_table();
    if (cfg.output == "pretty") {
        static const char* names[4] = {"1", "i", "j", "k"};
        std::ostringstream os;
        os << "basis products at t = " << scale.t() << "\n";
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c)
                os << names[r] << "*" << names[c] << " = " << render_entry(sym[r][c], scale)
                   << (c == 3 ? "\n" : "   ");
        }
        return os.str();
    }
    if (cfg.output == "csv") {
        std::ostringstream os;
        os << "row,col,x1,x2,x3,x4\n";
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                os << r << "," << c << "," << csv_coords(table[r][c].coords()) << "\n";
        return os.str();
    }
    Json entries = Json::array();
    Json rendered = Json::array();
    for (int r = 0; r < 4; ++r) {
        Json row = Json::array(), rrow = Json::array();
        for (int c = 0; c < 4; ++c) {
            row.push_back(table[r][c].coords());
            rrow.push_back(render_entry(sym[r][c], scale));
        }
        entries.push_back(row);
        rendered.push_back(rrow);
    }
    Json out{{"t", scale.t()}, {"basis", {"1", "i", "j", "k"}}, {"entries", entries},
             {"rendered", rendered}};
    return out.dump() + "\n";
}

std::string render_value(const RunConfig& cfg, const Hypercomplex& h) {
    if (cfg.output == "pretty") return to_pretty_string(h) + "\n";
    if (cfg.output == "csv") return csv_coords(h.coords()) + "\n";
    return to_json(h).dump() + "\n";
}

std::string cmd_eval(const RunConfig& cfg, const std::string& fn_arg, const std::string& expr_arg,
                     const Point4& point) {
    HFunction f = expr_arg.empty() ? load_function(cfg, fn_arg)
                                   : parse_expression(expr_arg, cfg.scale(), cfg.degree_cap());
    return render_value(cfg, f.eval(point));
}

std::string verdict_output(const RunConfig& cfg, const Verdict& v) {
    if (cfg.output == "pretty") {
        std::ostringstream os;
        os.precision(12);
        os << (v.pass ? "PASS" : "FAIL") << " residual " << v.residual << " at ("
           << v.worst_point[0] << ", " << v.worst_point[1] << ", " << v.worst_point[2] << ", "
           << v.worst_point[3] << ")\n";
        return os.str();
    }
    if (cfg.output == "csv") {
        std::ostringstream os;
        os.precision(17);
        os << "pass,residual,p1,p2,p3,p4\n"
           << (v.pass ? 1 : 0) << "," << v.residual << "," << csv_coords(v.worst_point) << "\n";
        return os.str();
    }
    return to_json(v).dump() + "\n";
}

int cmd_check(const RunConfig& cfg, const std::string& fn_arg, const std::string& mode,
              std::string& out) {
    const HFunction f = load_function(cfg, fn_arg);
    Verdict v;
    if (mode == "left") {
        v = is_left_regular(f, cfg.sample_set(), cfg.tolerance);
    } else if (mode == "right") {
        v = is_right_regular(f, cfg.sample_set(), cfg.tolerance);
    } else if (mode == "harmonic") {
        v = is_harmonic(f, cfg.sample_set(), cfg.tolerance);
    } else {
        throw ParseError("--mode must be left, right or harmonic");
    }
    out = verdict_output(cfg, v);
    return v.pass ? 0 : 1;
}

int cmd_expand(const RunConfig& cfg, const std::string& fn_arg, std::string& out) {
    const HFunction f = load_function(cfg, fn_arg);
    const ExpandResult r = expand(f, cfg.scale(), cfg.maxdeg, cfg.sample_set(), cfg.tolerance);
    if (cfg.output == "pretty") {
        std::ostringstream os;
        os.precision(12);
        os << "constant = " << to_pretty_string(r.series.constant) << "\n";
        for (const auto& [n, c] : r.series.coefficients)
            os << "eta^" << n.str() << " * (" << to_pretty_string(c) << ")\n";
        os << "residual = " << r.residual << "\n";
        out = os.str();
        return 0;
    }
    if (cfg.output == "csv") {
        std::ostringstream os;
        os.precision(17);
        os << "n1,n2,n3,c1,c2,c3,c4\n";
        os << "0,0,0," << csv_coords(r.series.constant.coords()) << "\n";
        for (const auto& [n, c] : r.series.coefficients)
            os << n.n1 << "," << n.n2 << "," << n.n3 << "," << csv_coords(c.coords()) << "\n";
        out = os.str();
        return 0;
    }
    Json j{{"series", to_json(r.series)}, {"residual", r.residual}};
    out = j.dump() + "\n";
    return 0;
}

int cmd_polar(const RunConfig& cfg, double x, double u, std::string& out) {
    const PolarDecomposition p = polar_decompose(HyperbolicNumber{cfg.scale(), x, u});
    if (cfg.output == "pretty") {
        std::ostringstream os;
        os.precision(12);
        os << "r = " << p.r << ", theta = " << p.theta << ", sign = " << p.sign
           << ", residual = " << p.residual << ", arg = " << p.euclidean_arg << "\n";
        out = os.str();
    } else if (cfg.output == "csv") {
        std::ostringstream os;
        os.precision(17);
        os << "r,theta,sign,residual,arg\n"
           << p.r << "," << p.theta << "," << p.sign << "," << p.residual << ","
           << p.euclidean_arg << "\n";
        out = os.str();
    } else {
        out = to_json(p).dump() + "\n";
    }
    return 0;
}

int cmd_oracle(const RunConfig& cfg, const std::string& fn_arg, double step, std::string& out) {
    const HFunction f = load_function(cfg, fn_arg);
    double worst = 0.0;
    Point4 worst_p{0, 0, 0, 0};
    int worst_l = 1;
    for (const Point4& p : sample_points(cfg.sample_set())) {
        for (int l = 1; l <= 4; ++l) {
            const double d =
                (partial(f, l, p) - finite_difference_partial(f, l, p, step)).max_abs();
            if (d > worst) {
                worst = d;
                worst_p = p;
                worst_l = l;
            }
        }
    }
    const bool pass = worst <= cfg.tolerance;
    if (cfg.output == "pretty") {
        std::ostringstream os;
        os.precision(12);
        os << (pass ? "PASS" : "FAIL") << " max |jet - central difference| = " << worst
           << " (axis " << worst_l << ")\n";
        out = os.str();
    } else if (cfg.output == "csv") {
        std::ostringstream os;
        os.precision(17);
        os << "pass,max_discrepancy,axis,p1,p2,p3,p4\n"
           << (pass ? 1 : 0) << "," << worst << "," << worst_l << "," << csv_coords(worst_p)
           << "\n";
        out = os.str();
    } else {
        Json j{{"pass", pass},
               {"max_discrepancy", worst},
               {"axis", worst_l},
               {"worst_point", worst_p},
               {"step", step},
               {"tolerance", cfg.tolerance}};
        out = j.dump() + "\n";
    }
    return pass ? 0 : 1;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"scaled hypercomplex ring toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string fn_arg, expr_arg, mode = "left", point_arg = "0,0,0,0";
    double polar_x = 1.0, polar_u = 0.0, fd_step = 1e-5;

    CLI::App* table = app.add_subcommand("table", "print the 4x4 basis multiplication table");
    add_common_flags(table, cfg);

    CLI::App* eval = app.add_subcommand("eval", "evaluate a builtin, spec file or expression");
    add_common_flags(eval, cfg);
    eval->add_option("--fn", fn_arg, "builtin name or polynomial spec file");
    eval->add_option("--expr", expr_arg, "inline expression, e.g. \"i*j\"");
    eval->add_option("--point", point_arg, "evaluation point x1,x2,x3,x4");

    CLI::App* check = app.add_subcommand("check", "regularity / harmonicity verdict");
    add_common_flags(check, cfg);
    check->add_option("--fn", fn_arg, "builtin name or polynomial spec file")->required();
    check->add_option("--mode", mode, "left, right or harmonic");

    CLI::App* expand_cmd = app.add_subcommand("expand", "Taylor-type expansion about the origin");
    add_common_flags(expand_cmd, cfg);
    expand_cmd->add_option("--fn", fn_arg, "builtin name or polynomial spec file")->required();

    CLI::App* polar = app.add_subcommand("polar", "polar-decompose x + u j");
    add_common_flags(polar, cfg);
    polar->add_option("--x", polar_x, "real part");
    polar->add_option("--u", polar_u, "j coefficient");

    CLI::App* oracle = app.add_subcommand("oracle", "jet vs finite-difference cross-check");
    add_common_flags(oracle, cfg);
    oracle->add_option("--fn", fn_arg, "builtin name or polynomial spec file")->required();
    oracle->add_option("--step", fd_step, "central-difference step");

    std::vector<const char*> argv;
    argv.push_back("shx");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        return {0, app.help()};
    } catch (const CLI::ParseError& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    }

    try {
        if (oracle->parsed() && !oracle->count("--tol")) cfg.tolerance = 1e-6;
        cfg.validate();
        if (table->parsed()) return {0, cmd_table(cfg)};
        if (eval->parsed()) {
            if (fn_arg.empty() == expr_arg.empty())
                throw ParseError("eval wants exactly one of --fn or --expr");
            return {0, cmd_eval(cfg, fn_arg, expr_arg, parse_point(point_arg))};
        }
        std::string out;
        int code = 0;
        if (check->parsed()) {
            code = cmd_check(cfg, fn_arg, mode, out);
        } else if (expand_cmd->parsed()) {
            code = cmd_expand(cfg, fn_arg, out);
        } else if (polar->parsed()) {
            code = cmd_polar(cfg, polar_x, polar_u, out);
        } else if (oracle->parsed()) {
            code = cmd_oracle(cfg, fn_arg, fd_step, out);
        }
        return {code, out};
    } catch (const ParseError& e) {
        Json j{{"error", "ParseError"}, {"message", e.what()}};
        return {2, j.dump() + "\n"};
    } catch (const DegreeError& e) {
        Json j{{"error", "DegreeTooLarge"}, {"message", e.what()}};
        return {2, j.dump() + "\n"};
    } catch (const ScaleMismatchError& e) {
        Json j{{"error", "ScaleMismatch"}, {"message", e.what()}};
        return {3, j.dump() + "\n"};
    } catch (const NotLeftRegularError& e) {
        Json j{{"error", "NotLeftRegular"},
               {"message", e.what()},
               {"worst_point", e.witness()},
               {"residual", e.residual()}};
        return {1, j.dump() + "\n"};
    } catch (const NullConeError& e) {
        Json j{{"error", "NullCone"}, {"message", e.what()}};
        return {1, j.dump() + "\n"};
    } catch (const NoBranchError& e) {
        Json j{{"error", "NoBranch"}, {"message", e.what()}};
        return {1, j.dump() + "\n"};
    } catch (const Error& e) {
        Json j{{"error", "Error"}, {"message", e.what()}};
        return {1, j.dump() + "\n"};
    }
}

}  // namespace shx
