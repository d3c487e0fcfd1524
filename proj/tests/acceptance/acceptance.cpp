#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monoinv/harness.hpp"
#include "monoinv/json.hpp"
#include "monoinv/measure.hpp"
#include "monoinv/unimodal.hpp"

using namespace monoinv;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kN = 10000;
constexpr std::uint64_t kSeed = 42;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Line {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + what;
        }
    }
    void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

int failures = 0;

void report(int id, const std::string& title, const Line& line) {
    std::cout << (line.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << title << "  [" << line.detail << "]"
              << std::endl;
    failures += !line.pass;
}

GenConfig base_config() {
    GenConfig cfg;
    cfg.seed = kSeed;
    cfg.max_knots = 12;
    return cfg;
}

void run_laws(Line& line, std::initializer_list<const char*> laws) {
    for (const char* law : laws) {
        auto t0 = Clock::now();
        auto r = run_law(law, kN, base_config());
        std::ostringstream os;
        os << law << " " << r.failure_count << " failures / " << r.instances_checked << " checked, "
           << std::setprecision(3) << seconds_since(t0) << " s";
        line.note(os.str());
        line.require(r.passed() && r.instances_run == kN, std::string(law) + ": " + (r.failures.empty() ? "" : r.failures.front().got));
    }
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(MONOINV_CLI_PATH) + " " + args + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Rational q(long n, long d = 1) { return make_rational(n, d); }

void criterion_1() {
    auto t0 = Clock::now();
    Line line;
    PiecewiseMeasure mu(Interval::real_line(), {},
                        {{ExtendedReal(0), ExtendedReal(q(1, 2)), 1}, {ExtendedReal(q(3, 2)), ExtendedReal(2), 1}});
    auto F = distribution_function(mu, 0);
    auto c = classify(F);
    line.require(!c.cdf_unimodal, "cdf_unimodal == false");
    line.require(!c.qf_absolutely_continuous, "qf_absolutely_continuous == false");
    line.require(!c.quantile_unimodal, "quantile_unimodal == false");

    auto Q = std::get<PiecewiseMonotone>(quantile_function(F));
    line.require(jump_locations(Q) == std::vector<Rational>{q(1, 2)}, "single jump of Q at 1/2");
    auto lower = restrict(Q, Interval::open(ExtendedReal(0), ExtendedReal(q(1, 2))));
    auto upper = restrict(Q, Interval::open(ExtendedReal(q(1, 2)), ExtendedReal(1)));
    line.require(lower.segment_count() == 1 && upper.segment_count() == 1, "Q affine on (0,1/2) and on (1/2,1)");
    line.require(qf_shape_check(lower).holds && qf_shape_check(upper).holds, "shape check holds on each half");
    line.require(!qf_shape_check(Q).holds, "qf_shape_check(Q) == false");
    // same slopes without the jump: the check must pass
    auto joined = PiecewiseMonotone::from_pieces(Q.lo(), Q.hi(), {q(1, 2)}, {Q.pieces()[0], {Q.pieces()[1].slope, Q.pieces()[0].intercept}});
    line.require(qf_shape_check(joined).holds, "jump removed => shape check holds");
    line.require(run_cli(std::string("classify --spec ") + MONOINV_TEST_DATA_DIR + "/fix_a.json >/dev/null") == 3,
                 "CLI classify exit 3");
    double s = seconds_since(t0);
    line.require(s < 1.0, "runtime < 1 s");
    std::ostringstream os;
    os << std::setprecision(3) << s << " s";
    line.note(os.str());
    report(1, "FIX-A counterexample: not unimodal only because Q jumps at 1/2", line);
}

void criterion_2() {
    Line line;
    auto t0 = Clock::now();
    run_laws(line, {"MAIN_EQUIV"});
    double s = seconds_since(t0);
    line.require(s < 60.0, "runtime < 60 s");
    std::uint64_t jumps = 0, flats = 0, infinite = 0, unimodal = 0;
    auto cfg = base_config();
    for (std::uint64_t i = 0; i < kN; ++i) {
        auto g = gen_monotone(instance_config(cfg, i));
        jumps += has_jump(g);
        flats += !constancy_set(g).empty();
        infinite += !g.lo().is_finite() || !g.hi().is_finite();
        unimodal += cdf_shape_check(g).holds;
    }
    line.require(jumps > 0 && flats > 0 && infinite > 0, "instance mix has jumps, flats and infinite domains");
    line.require(unimodal > 0 && unimodal < kN, "both verdicts occur");
    line.note("with jumps " + std::to_string(jumps) + ", flats " + std::to_string(flats) + ", infinite domain " +
              std::to_string(infinite) + ", unimodal " + std::to_string(unimodal));
    report(2, "three-way unimodality equivalence, 10000 instances", line);
}

void criterion_3() {
    Line line;
    run_laws(line, {"QF_AC"});
    auto cfg = base_config();
    std::uint64_t filtered = 0, forced = 0, bad = 0;
    for (std::uint64_t i = 0; i < kN; ++i) {
        auto c = instance_config(cfg, i);
        for (bool force : {false, true}) {
            c.force_unimodal = force;
            auto g = gen_monotone(c);
            if (!cdf_shape_check(g).holds) {
                bad += force;
                continue;
            }
            (force ? forced : filtered) += 1;
            auto qc = quantile_function(g);
            if (auto* Q = std::get_if<PiecewiseMonotone>(&qc); Q && has_jump(*Q)) ++bad;
        }
    }
    line.require(bad == 0, "no interior jumps of Q");
    line.require(forced == kN, "all forced instances unimodal");
    line.note("unimodal among defaults " + std::to_string(filtered) + ", forced " + std::to_string(forced));
    report(3, "unimodal => quantile function has no interior jumps", line);
}

void criterion_4() {
    Line line;
    run_laws(line, {"PUSH_FWD", "PUSH_CONT", "CONT_EQUIV"});
    report(4, "pushforward identities; continuity and strict increase agree", line);
}

void criterion_5() {
    Line line;
    run_laws(line, {"GALOIS"});
    report(5, "Galois connection on the refinement grid", line);
}

void criterion_6() {
    Line line;
    run_laws(line, {"INV_RULE", "AC_EQUIV"});
    report(6, "inverse-function rule; three absolute-continuity tests agree", line);
}

void criterion_7() {
    Line line;
    run_laws(line, {"DECOMP"});
    report(7, "unimodal => at most one atom, at a mode of the density", line);
}

void criterion_8() {
    Line line;
    run_laws(line, {"DOUBLE_INV"});
    report(8, "double inverse gives the class back", line);
}

void criterion_9() {
    Line line;
    fs::path dir = fs::temp_directory_path() / ("monoinv_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::string data = MONOINV_TEST_DATA_DIR;

    auto t0 = Clock::now();
    int ingest = run_cli("ingest --samples " + data + "/uniform_grid_1000.csv --out " + (dir / "grid.json").string());
    int classify_code = run_cli("classify --spec " + (dir / "grid.json").string() + " --out " + (dir / "grid_report.json").string());
    double s = seconds_since(t0);
    line.require(ingest == 0, "ingest exit 0");
    line.require(classify_code == 0, "classify exit 0");
    line.require(s < 2.0, "ingest + classify < 2 s");
    std::ostringstream os;
    os << "ingest+classify " << std::setprecision(3) << s << " s";
    line.note(os.str());
    try {
        auto spec = Json::parse(slurp(dir / "grid.json"));
        line.require(spec["uniform_pieces"].size() == 999, "999 pieces");
    } catch (const std::exception& e) {
        line.require(false, e.what());
    }

    auto first = dir / "d1.json", second = dir / "d2.json", echo = dir / "echo.json";
    int c1 = run_cli("classify --spec " + data + "/fix_d.json --out " + first.string());
    try {
        std::ofstream(echo) << Json::parse(slurp(first))["input"].dump(2) << "\n";
    } catch (const std::exception& e) {
        line.require(false, e.what());
    }
    int c2 = run_cli("classify --spec " + echo.string() + " --out " + second.string());
    line.require(c1 == 0 && c2 == 0, "FIX-D classify exit 0");
    std::string a = slurp(first), b = slurp(second);
    line.require(!a.empty() && a == b, "FIX-D report byte-identical after round trip");
    line.note("FIX-D report " + std::to_string(a.size()) + " bytes");
    fs::remove_all(dir);
    report(9, "CLI end to end: 1000-sample ingest, FIX-D round trip", line);
}

}  // namespace

// No argument runs every criterion; "acceptance 4" runs one.
int main(int argc, char** argv) {
    void (*criteria[])() = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                            criterion_6, criterion_7, criterion_8, criterion_9};
    if (argc > 1) {
        int id = std::atoi(argv[1]);
        if (id < 1 || id > 9) {
            std::cerr << "usage: acceptance [1-9]\n";
            return 2;
        }
        criteria[id - 1]();
        return failures == 0 ? 0 : 1;
    }
    for (auto* c : criteria) c();
    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
