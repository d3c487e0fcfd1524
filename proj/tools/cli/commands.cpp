#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "monoinv/harness.hpp"
#include "monoinv/unimodal.hpp"
#include "spec_io.hpp"

namespace monoinv::cli {

namespace {

struct InputFlags {
    std::string spec;
    std::string samples;
    bool header = false;
    std::string anchor;
    std::string out;
    int plot_points = -1;
};

struct Loaded {
    PiecewiseMeasure measure;
    Rational anchor;
    PiecewiseMonotone F;
    Json warnings = Json::array();
};

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError:
        case ErrorKind::UnknownLaw: return 1;
        case ErrorKind::QfNotAbsolutelyContinuous: return 4;
        default: return 2;
    }
}

Loaded load(const InputFlags& f) {
    if (f.spec.empty() == f.samples.empty()) throw Error(ErrorKind::ParseError, "give exactly one of --spec and --samples");
    PiecewiseMeasure m = PiecewiseMeasure::zero(Interval::real_line());
    if (!f.spec.empty()) {
        m = read_spec_file(f.spec);
    } else {
        std::ifstream in(f.samples);
        if (!in) throw Error(ErrorKind::ParseError, "cannot read " + f.samples);
        m = parse_spec(ingest_samples(in, f.header).spec.dump());
    }
    Rational anchor = f.anchor.empty() ? default_anchor(m.carrier()) : parse_rational(f.anchor);
    Loaded l{m, anchor, distribution_function(m, anchor), Json::array()};
    ExtendedReal total = m.measure_of(m.carrier());
    if (!(total == ExtendedReal(1))) l.warnings.push_back("total mass is " + to_string(total));
    if (!(l.F.lower_limit() == ExtendedReal(0)))
        l.warnings.push_back("distribution function starts at " + to_string(l.F.lower_limit()) +
                             ", so quantile levels are shifted accordingly");
    return l;
}

Json intervals(const PiecewiseMonotone& g) {
    return Json{{"regular_domain", to_json(regular_domain(g))},
                {"mass_interval", to_json(mass_interval(g))},
                {"supporting_interval", to_json(supporting_interval(g))}};
}

Json breakpoints_json(const PiecewiseMonotone& g) {
    Json out = Json::array();
    for (const auto& b : g.breakpoints())
        out.push_back({{"x", to_json(b.x)}, {"left", to_json(b.left_limit)}, {"right", to_json(b.right_limit)}});
    return out;
}

std::string plot_csv(const PiecewiseMonotone& g, int n) {
    std::vector<Rational> pts(g.knots().begin(), g.knots().end());
    if (g.lo().is_finite()) pts.push_back(g.lo().value());
    if (g.hi().is_finite()) pts.push_back(g.hi().value());
    Rational a = -1, b = 1;
    if (!pts.empty()) {
        a = *std::min_element(pts.begin(), pts.end()) - 1;
        b = *std::max_element(pts.begin(), pts.end()) + 1;
    }
    std::ostringstream os;
    os << "x,left,right\n";
    for (int i = 0; i <= n; ++i) {
        Rational x = n == 0 ? a : a + (b - a) * i / n;
        os << to_string(x) << ',' << to_string(eval(g, x, Version::Left)) << ','
           << to_string(eval(g, x, Version::Right)) << '\n';
    }
    return os.str();
}

void emit(const InputFlags& f, const Json& report, const std::string& csv, std::ostream& out) {
    std::string body = report.dump(2) + "\n";
    if (!f.out.empty()) {
        std::ofstream file(f.out);
        if (!file) throw Error(ErrorKind::ParseError, "cannot write " + f.out);
        file << body;
        out << csv;
        return;
    }
    out << body;
    if (!csv.empty()) out << '\n' << csv;
}

Json base_report(const Loaded& l) {
    return Json{{"input", spec_json(l.measure)}, {"anchor", to_json(l.anchor)}, {"warnings", l.warnings}};
}

int cmd_classify(const InputFlags& f, std::ostream& out) {
    Loaded l = load(f);
    Classification c = classify(l.F);
    auto q = quantile_function(l.F);
    auto parts = lebesgue_decompose(l.measure);

    Json report = base_report(l);
    report["classification"] = to_json(c);
    report["distribution_function"] = to_json(l.F);
    Json q_intervals = std::holds_alternative<PiecewiseMonotone>(q)
                           ? intervals(std::get<PiecewiseMonotone>(q))
                           : Json{{"regular_domain", to_json(std::get<DegenerateInverse>(q).domain)}};
    report["intervals"] = {{"F", intervals(l.F)}, {"Q", q_intervals}};
    report["decomposition"] = {{"atoms", to_json(parts.sing)["atoms"]}, {"abs_density", to_json(density(parts.abs))}};
    report["quantile_density"] = c.qf_absolutely_continuous ? to_json(quantile_density(l.F)) : Json(nullptr);
    if (!c.qf_absolutely_continuous) report["warnings"].push_back("quantile function jumps; no quantile density");
    emit(f, report, f.plot_points >= 0 ? plot_csv(l.F, f.plot_points) : "", out);
    return c.cdf_unimodal ? 0 : 3;
}

int cmd_invert(const InputFlags& f, std::ostream& out) {
    Loaded l = load(f);
    auto q = quantile_function(l.F);
    if (auto* d = std::get_if<DegenerateInverse>(&q))
        throw Error(ErrorKind::ConstantFunction,
                    "quantile function is constant " + to_string(d->value) + " on " + to_string(d->domain));
    const auto& Q = std::get<PiecewiseMonotone>(q);
    Json report = base_report(l);
    report["distribution_function"] = to_json(l.F);
    report["quantile_function"] = to_json(Q);
    report["breakpoints"] = breakpoints_json(Q);
    report["intervals"] = intervals(Q);
    emit(f, report, f.plot_points >= 0 ? plot_csv(Q, f.plot_points) : "", out);
    return 0;
}

int cmd_decompose(const InputFlags& f, std::ostream& out) {
    Loaded l = load(f);
    auto parts = lebesgue_decompose(l.measure);
    Json report = base_report(l);
    report["abs"] = spec_json(parts.abs);
    report["sing"] = spec_json(parts.sing);
    report["atoms"] = to_json(parts.sing)["atoms"];
    report["abs_density"] = to_json(density(parts.abs));
    emit(f, report, f.plot_points >= 0 ? plot_csv(l.F, f.plot_points) : "", out);
    return 0;
}

int cmd_qdensity(const InputFlags& f, std::ostream& out) {
    Loaded l = load(f);
    Json report = base_report(l);
    report["quantile_density"] = to_json(quantile_density(l.F));
    std::string csv;
    if (f.plot_points >= 0)
        if (auto q = quantile_function(l.F); std::holds_alternative<PiecewiseMonotone>(q))
            csv = plot_csv(std::get<PiecewiseMonotone>(q), f.plot_points);
    emit(f, report, csv, out);
    return 0;
}

struct IngestFlags {
    std::string samples;
    bool header = false;
    bool allow_degenerate = false;
    std::string out;
};

int cmd_ingest(const IngestFlags& f, std::ostream& out, std::ostream& err) {
    std::ifstream in(f.samples);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + f.samples);
    IngestResult r = ingest_samples(in, f.header);
    if (r.distinct < 2 && !f.allow_degenerate)
        throw Error(ErrorKind::InvalidMeasure, "fewer than two distinct sample values (use --allow-degenerate)");
    err << "ingested " << r.samples << " samples, " << r.distinct << " distinct\n";
    std::string body = r.spec.dump(2) + "\n";
    if (f.out.empty()) {
        out << body;
    } else {
        std::ofstream file(f.out);
        if (!file) throw Error(ErrorKind::ParseError, "cannot write " + f.out);
        file << body;
    }
    return 0;
}

struct VerifyFlags {
    std::string law = "all";
    std::uint64_t n = 1000;
    std::uint64_t seed = 0;
    int max_knots = 12;
    unsigned threads = 1;
    std::string out;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
    GenConfig cfg;
    cfg.seed = f.seed;
    cfg.max_knots = f.max_knots;
    RunOptions options;
    options.threads = f.threads;
    std::vector<std::string> laws = f.law == "all" ? law_ids() : std::vector<std::string>{f.law};
    Json reports = Json::array();
    bool passed = true;
    for (const auto& law : laws) {
        CheckReport r = run_law(law, f.n, cfg, options);
        passed = passed && r.passed();
        reports.push_back(to_json(r));
    }
    Json body{{"seed", f.seed}, {"n", f.n}, {"max_knots", f.max_knots}, {"reports", reports}, {"passed", passed}};
    std::string text = body.dump(2) + "\n";
    if (f.out.empty()) {
        out << text;
    } else {
        std::ofstream file(f.out);
        if (!file) throw Error(ErrorKind::ParseError, "cannot write " + f.out);
        file << text;
    }
    return passed ? 0 : 5;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("MONOINV_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
        }
    }
    return 0;
}

void add_input_flags(CLI::App* sub, InputFlags& f) {
    sub->add_option("--spec", f.spec, "distribution spec (JSON)");
    sub->add_option("--samples", f.samples, "samples, one decimal per line");
    sub->add_flag("--header", f.header, "samples file starts with a header line");
    sub->add_option("--anchor", f.anchor, "anchor z with F(z+) = 0, as p/q or decimal");
    sub->add_option("--out", f.out, "write the JSON report here");
    sub->add_option("--plot-points", f.plot_points, "also emit N+1 rows of x,left,right")->check(CLI::NonNegativeNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact generalized inverses, quantile densities and unimodality of piecewise-linear distributions",
                 "monoinv"};
    app.require_subcommand(1);
    bool stamp = false;
    app.add_flag("--stamp", stamp, "print a timestamp to stderr");

    InputFlags classify_f, invert_f, decompose_f, qdensity_f;
    auto* classify_cmd = app.add_subcommand("classify", "classify a distribution (exit 0 unimodal, 3 not)");
    add_input_flags(classify_cmd, classify_f);
    auto* invert_cmd = app.add_subcommand("invert", "quantile function (generalized inverse)");
    add_input_flags(invert_cmd, invert_f);
    auto* decompose_cmd = app.add_subcommand("decompose", "Lebesgue decomposition");
    add_input_flags(decompose_cmd, decompose_f);
    auto* qdensity_cmd = app.add_subcommand("qdensity", "quantile density (exit 4 if it does not exist)");
    add_input_flags(qdensity_cmd, qdensity_f);

    IngestFlags ingest_f;
    auto* ingest_cmd = app.add_subcommand("ingest", "samples -> interpolated empirical distribution spec");
    ingest_cmd->add_option("--samples", ingest_f.samples, "samples, one decimal per line")->required();
    ingest_cmd->add_flag("--header", ingest_f.header, "skip the first line");
    ingest_cmd->add_flag("--allow-degenerate", ingest_f.allow_degenerate, "emit a single atom for constant data");
    ingest_cmd->add_option("--out", ingest_f.out, "write the spec here");

    VerifyFlags verify_f;
    verify_f.seed = default_seed();
    auto* verify_cmd = app.add_subcommand("verify", "replay the identities on random instances (exit 5 on failure)");
    verify_cmd->add_option("--law", verify_f.law, "law id or 'all'");
    verify_cmd->add_option("--n", verify_f.n, "instances per law");
    verify_cmd->add_option("--seed", verify_f.seed, "seed (default: $MONOINV_SEED or 0)");
    verify_cmd->add_option("--max-knots", verify_f.max_knots, "maximal number of segments")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--threads", verify_f.threads, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--out", verify_f.out, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "monoinv: " << e.what() << "\n";
        return 1;
    }

    if (stamp) {
        auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        err << "generated_at " << buf << "\n";
    }

    try {
        if (*classify_cmd) return cmd_classify(classify_f, out);
        if (*invert_cmd) return cmd_invert(invert_f, out);
        if (*decompose_cmd) return cmd_decompose(decompose_f, out);
        if (*qdensity_cmd) return cmd_qdensity(qdensity_f, out);
        if (*ingest_cmd) return cmd_ingest(ingest_f, out, err);
        if (*verify_cmd) return cmd_verify(verify_f, out);
    } catch (const Error& e) {
        err << "monoinv: " << e.what() << "\n";
        return exit_code(e.kind());
    }
    return 1;
}

}  // namespace monoinv::cli
