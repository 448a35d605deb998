#include "certquad/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "certquad/bounds.hpp"
#include "certquad/expr.hpp"
#include "certquad/extremal.hpp"
#include "certquad/integrand.hpp"
#include "certquad/norms.hpp"
#include "certquad/prob.hpp"
#include "certquad/quadrature.hpp"

namespace certquad {

namespace {

using nlohmann::json;

// Everything the tool prints goes through these: 12 significant digits,
// identical in text and JSON output.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double round12(double v) { return std::strtod(num(v).c_str(), nullptr); }

const char* yesno(bool b) { return b ? "yes" : "no"; }

NormKind parse_norm(const std::string& name, const std::optional<double>& p) {
    if (name == "inf") return NormKind::linf();
    if (name == "l1") return NormKind::l1();
    if (name == "lp") {
        if (!p) throw std::invalid_argument("--norm lp requires --p");
        return NormKind::lp(*p);
    }
    throw std::invalid_argument("unknown norm '" + name + "' (choose inf, l1 or lp)");
}

struct Common {
    std::string f;
    double a = 0.0;
    double b = 1.0;
    std::string norm = "inf";
    std::optional<double> p;
    bool as_json = false;
};

void add_common(CLI::App* sub, Common& c, bool with_function) {
    if (with_function)
        sub->add_option("--f", c.f, "function of t, e.g. \"t^2\"")->required();
    sub->add_option("--a", c.a, "left endpoint")->required();
    sub->add_option("--b", c.b, "right endpoint")->required();
    sub->add_option("--norm", c.norm, "derivative norm: inf, l1 or lp")
        ->check(CLI::IsMember({"inf", "l1", "lp"}));
    sub->add_option("--p", c.p, "exponent for --norm lp (p > 1)");
    sub->add_flag("--json", c.as_json, "emit a single JSON object");
}

json inputs_json(const Common& c, bool with_function) {
    json in;
    if (with_function) in["f"] = c.f;
    in["a"] = round12(c.a);
    in["b"] = round12(c.b);
    in["norm"] = c.norm;
    if (c.p) in["p"] = round12(*c.p);
    return in;
}

int run_integrate(const Common& c, std::size_t n, std::optional<double> tol, std::size_t cap,
                  std::ostream& out) {
    Interval domain(c.a, c.b);
    NormKind kind = parse_norm(c.norm, c.p);
    IntegrandFunction f = IntegrandFunction::from_expression(parse(c.f));

    QuadratureResult result = tol ? adaptive_integrate(f, domain, *tol, kind, cap)
                                  : remainder_bound(f, uniform_partition(domain, n), kind);
    double bound = tol ? result.per_interval_sum : result.remainder_bound;

    if (c.as_json) {
        json j;
        j["subcommand"] = "integrate";
        j["inputs"] = inputs_json(c, true);
        if (tol)
            j["inputs"]["tol"] = round12(*tol);
        else
            j["inputs"]["n"] = n;
        j["estimate"] = round12(result.estimate);
        j["bound"] = round12(bound);
        j["certified"] = result.certified;
        j["converged"] = result.converged;
        out << j.dump() << "\n";
    } else {
        out << "estimate  = " << num(result.estimate) << "\n";
        out << "bound     = " << num(bound) << "\n";
        out << "intervals = " << result.partition.intervals() << "\n";
        out << "certified = " << yesno(result.certified) << "\n";
        out << "converged = " << yesno(result.converged) << "\n";
    }
    return result.converged ? 0 : 2;
}

int run_bound(const Common& c, double x, std::optional<double> alpha, std::ostream& out) {
    Interval domain(c.a, c.b);
    NormKind kind = parse_norm(c.norm, c.p);
    IntegrandFunction f = IntegrandFunction::from_expression(parse(c.f));

    SegmentNorms norms = segment_norms(f, x, domain, kind);
    std::optional<HolderPair> holder;
    if (alpha) holder = HolderPair(*alpha, *alpha / (*alpha - 1.0));
    BoundReport report = bound_for(norms, EvaluationPoint{x}, domain, holder);

    if (c.as_json) {
        json j;
        j["subcommand"] = "bound";
        j["inputs"] = inputs_json(c, true);
        j["inputs"]["x"] = round12(x);
        if (alpha) j["inputs"]["alpha"] = round12(*alpha);
        j["bound"] = round12(report.best());
        j["certified"] = report.certified;
        j["converged"] = true;
        out << j.dump() << "\n";
    } else {
        out << "norms     = " << num(norms.left) << " / " << num(norms.middle) << " / "
            << num(norms.right) << " (whole " << num(norms.whole) << ")\n";
        out << "first     = " << num(report.first_bound) << "\n";
        out << "max       = " << num(report.max_branch) << "\n";
        if (report.holder_branch) out << "holder    = " << num(*report.holder_branch) << "\n";
        out << "dual-max  = " << num(report.dual_max_branch) << "\n";
        if (report.combined) out << "combined  = " << num(*report.combined) << "\n";
        out << "best      = " << num(report.best()) << "\n";
        out << "certified = " << yesno(report.certified) << "\n";
    }
    return 0;
}

int run_sharpness(const Common& c, const std::string& witness_name, double k,
                  std::optional<double> x_opt, std::ostream& out) {
    Interval domain(c.a, c.b);
    NormKind kind = parse_norm(c.norm, c.p);

    double gap = 0.0;
    double bound = 0.0;
    double x = 0.0;

    if (witness_name == "fstar") {
        x = x_opt.value_or(domain.quarter());
        WitnessFunction w = make_fstar(EvaluationPoint{x}, k, domain);
        gap = w.gap_closed();
        bound = lipschitz_bound(EvaluationPoint{x}, domain, k, 1.0);
    } else if (witness_name == "midpoint-kink" || witness_name == "quarter-kink") {
        WitnessFunction w = witness_name == "midpoint-kink" ? make_midpoint_kink(k, domain)
                                                            : make_quarter_kink(domain);
        x = x_opt.value_or(w.designated_x());
        gap = w.gap_closed();
        std::optional<SegmentNorms> norms = w.norms(x, kind);
        if (!norms) throw std::invalid_argument("witness has no derivative norms");
        BoundReport report = bound_for(*norms, EvaluationPoint{x}, domain);
        // The branch each sharpness claim concerns: the whole-norm form,
        // except the Lp trapezoid/combined forms for the two kink witnesses.
        if (kind.is_lp())
            bound = witness_name == "midpoint-kink" ? report.first_bound : *report.combined;
        else
            bound = report.max_branch;
    } else {
        throw std::invalid_argument("unknown witness '" + witness_name +
                                    "' (choose fstar, midpoint-kink or quarter-kink)");
    }

    double ratio = gap != 0.0 ? bound / gap : 1.0;

    if (c.as_json) {
        json j;
        j["subcommand"] = "sharpness";
        j["inputs"] = inputs_json(c, false);
        j["inputs"]["witness"] = witness_name;
        j["inputs"]["x"] = round12(x);
        j["inputs"]["k"] = round12(k);
        j["gap"] = round12(gap);
        j["bound"] = round12(bound);
        j["ratio"] = round12(ratio);
        j["certified"] = true;
        j["converged"] = true;
        out << j.dump() << "\n";
    } else {
        out << "witness   = " << witness_name << " (x = " << num(x) << ")\n";
        out << "gap       = " << num(gap) << "\n";
        out << "bound     = " << num(bound) << "\n";
        out << "ratio     = " << num(ratio) << "\n";
        out << "certified = yes\n";
    }
    return 0;
}

int run_pdf_bound(const Common& c, double x, bool rescale, std::ostream& out) {
    Interval domain(c.a, c.b);
    NormKind kind = parse_norm(c.norm, c.p);

    IntegrandFunction f = [&] {
        Expression e = parse(c.f);
        try {
            return IntegrandFunction::from_expression(e);
        } catch (const NonDifferentiableError&) {
            return IntegrandFunction::value_only(e);
        }
    }();
    DensityFunction density = DensityFunction::make(std::move(f), domain, rescale);
    CdfBoundReport report = cdf_companion_bound(density, EvaluationPoint{x}, kind);

    if (c.as_json) {
        json j;
        j["subcommand"] = "pdf-bound";
        j["inputs"] = inputs_json(c, true);
        j["inputs"]["x"] = round12(x);
        j["gap"] = round12(report.gap);
        j["bound"] = round12(report.bound);
        j["certified"] = report.certified;
        j["converged"] = true;
        out << j.dump() << "\n";
    } else {
        out << "functional = " << num(report.functional) << "\n";
        out << "target     = " << num(report.target) << "\n";
        out << "gap        = " << num(report.gap) << "\n";
        out << "bound      = " << num(report.bound) << "\n";
        out << "certified  = " << yesno(report.certified) << "\n";
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"error-certified two-point quadrature toolkit"};
    app.name("certquad");
    app.require_subcommand(1);

    Common ci, cb, cs, cp;
    std::size_t n = 1;
    std::optional<double> tol;
    std::size_t cap = 1'000'000;
    double xb = 0.0, xp = 0.0;
    std::optional<double> alpha;
    std::string witness_name;
    double k = 1.0;
    std::optional<double> xs;
    bool rescale = false;

    CLI::App* integrate = app.add_subcommand("integrate", "integrate with a certified bound");
    add_common(integrate, ci, true);
    integrate->add_option("--n", n, "number of uniform intervals");
    integrate->add_option("--tol", tol, "adaptive tolerance on the certified bound");
    integrate->add_option("--cap", cap, "adaptive interval cap");

    CLI::App* bound = app.add_subcommand("bound", "bound the two-point rule error at x");
    add_common(bound, cb, true);
    bound->add_option("--x", xb, "evaluation point in [a, (a+b)/2]")->required();
    bound->add_option("--alpha", alpha, "conjugate exponent for the Hoelder branch");

    CLI::App* sharp = app.add_subcommand("sharpness", "show a witness achieving a bound");
    add_common(sharp, cs, false);
    sharp->add_option("--witness", witness_name, "fstar, midpoint-kink or quarter-kink")
        ->required();
    sharp->add_option("--k", k, "order (fstar) or slope (midpoint-kink)");
    sharp->add_option("--x", xs, "evaluation point; default is the witness's own");

    CLI::App* pdf = app.add_subcommand("pdf-bound", "bound the CDF functional of a density");
    add_common(pdf, cp, true);
    pdf->add_option("--x", xp, "evaluation point in [a, (a+b)/2]")->required();
    pdf->add_flag("--rescale", rescale, "normalize the density automatically");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(integrate)) return run_integrate(ci, n, tol, cap, out);
        if (app.got_subcommand(bound)) return run_bound(cb, xb, alpha, out);
        if (app.got_subcommand(sharp)) return run_sharpness(cs, witness_name, k, xs, out);
        if (app.got_subcommand(pdf)) return run_pdf_bound(cp, xp, rescale, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand given\n";
    return 1;
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

} // namespace certquad
