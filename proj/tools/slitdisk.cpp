// Command-line front end: point evaluation, verification suites with JSON/CSV
// reports, and domain-coloring raster export.
//
// Exit codes: 0 success, 1 failed verification check, 2 usage/parse error,
// 3 domain error raised by the library.

#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "slitdisk/blaschke.hpp"
#include "slitdisk/config.hpp"
#include "slitdisk/counterexample.hpp"
#include "slitdisk/errors.hpp"
#include "slitdisk/innerfn.hpp"
#include "slitdisk/render.hpp"
#include "slitdisk/report.hpp"
#include "slitdisk/slitmap.hpp"

namespace {

using slitdisk::cplx;
using slitdisk::Point;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

// 15 significant digits; a purely real value prints without the ",0" tail.
std::string fmt_value(cplx v) {
    if (v.imag() == 0.0)
        return fmt_real(v.real());
    return fmt_real(v.real()) + "," + fmt_real(v.imag());
}

cplx parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    try {
        std::size_t used = 0;
        const std::string re_part = text.substr(0, comma);
        const double re = std::stod(re_part, &used);
        if (used != re_part.size())
            throw UsageError("bad complex literal '" + text + "'");
        double im = 0.0;
        if (comma != std::string::npos) {
            const std::string im_part = text.substr(comma + 1);
            im = std::stod(im_part, &used);
            if (used != im_part.size())
                throw UsageError("bad complex literal '" + text + "'");
        }
        return {re, im};
    } catch (const std::logic_error&) {
        throw UsageError("bad complex literal '" + text + "'");
    }
}

// "re,im" for a plain point, "dev:re,im" for the point 1 - (re + i im)
// carried in deviation form.
Point parse_point(const std::string& text) {
    if (text.rfind("dev:", 0) == 0)
        return Point::from_one(parse_complex(text.substr(4)));
    return Point::regular(parse_complex(text));
}

// "a..b" -> [a, b]
std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw UsageError("bad range '" + text + "', expected a..b");
    try {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo < 2 || hi < lo || hi > 165)
            throw UsageError("range '" + text + "' out of [2, 165] or reversed");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("bad range '" + text + "', expected a..b");
    }
}

int run_eval(const slitdisk::RunConfig& cfg, const std::string& target,
             const std::string& point_str, double mass,
             const std::string& eta_str) {
    const Point pt = parse_point(point_str);
    cplx v;
    if (target == "blaschke") {
        const auto B = slitdisk::factorial_blaschke(cfg.a, cfg.n_max, true);
        v = slitdisk::eval(B, pt);
    } else if (target == "singular") {
        const auto S = slitdisk::SingularInner::single(parse_complex(eta_str), mass);
        v = slitdisk::singular_eval(S, pt);
    } else if (target == "map-g") {
        v = slitdisk::slit_to_disk(pt).value();
    } else if (target == "map-h") {
        v = slitdisk::disk_to_slit(pt).value();
    } else { // phi
        const auto cx = slitdisk::build_counterexample(cfg.a, cfg.n_max, cfg.eval_tol);
        v = slitdisk::phi_eval(cx, pt);
    }
    std::cout << fmt_value(v) << "\n";
    return 0;
}

int run_verify(const slitdisk::RunConfig& cfg, const std::string& selector) {
    slitdisk::VerificationReport rep(cfg);
    slitdisk::run_checks(selector, cfg, rep);
    const std::string dir = cfg.output_dir;
    slitdisk::write_file_atomic(dir + "/report.json", rep.to_json());
    slitdisk::write_file_atomic(dir + "/report.csv", rep.to_csv());
    try {
        for (const auto& [name, content] : slitdisk::export_profiles(cfg))
            slitdisk::write_file_atomic(dir + "/" + name, content);
    } catch (const slitdisk::Error& e) {
        std::cerr << "warning: profile export failed: " << e.what() << "\n";
    }
    std::cout << rep.to_text_table();
    std::size_t failures = 0;
    for (const auto& c : rep.checks())
        if (!c.pass)
            ++failures;
    std::cout << "checks: " << rep.checks().size() << ", failures: " << failures
              << ", report: " << dir << "/report.json\n";
    return rep.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"slit-disk counterexample toolkit"};
    app.require_subcommand(1);
    app.fallthrough(true);

    std::string config_path;
    app.add_option("--config", config_path, "flat key=value config file");
    unsigned long seed = 0;
    auto* seed_opt = app.add_option("--seed", seed, "override the sampling seed");
    std::string out_dir;
    app.add_option("--out-dir", out_dir, "override the output directory");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate one map at one point");
    std::string eval_target;
    eval_cmd->add_option("target", eval_target, "blaschke|singular|map-g|map-h|phi")
        ->required()
        ->check(CLI::IsMember({"blaschke", "singular", "map-g", "map-h", "phi"}));
    std::string point_str;
    eval_cmd->add_option("--point", point_str, "point as re,im or dev:re,im")
        ->required();
    double mass = 1.0;
    eval_cmd->add_option("--t", mass, "singular atom mass (default 1)");
    std::string eta_str = "1";
    eval_cmd->add_option("--eta", eta_str, "singular atom support (default 1)");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string selector;
    verify_cmd
        ->add_option("suite", selector,
                     "thin|hoffman|slit-floor|products|map|counterexample|"
                     "lemma25|remark26|thin-general|all")
        ->required()
        ->check(CLI::IsMember({"thin", "hoffman", "slit-floor", "products", "map",
                               "counterexample", "lemma25", "remark26",
                               "thin-general", "all"}));
    double hoffman_c = 0.0;
    auto* c_opt = verify_cmd->add_option(
        "--c", hoffman_c, "print the separation lower bound for this ratio");
    double theta_flag = 0.0;
    auto* theta_opt = verify_cmd->add_option(
        "--theta", theta_flag, "override the probe angle for slit-floor");
    std::string m_range_str;
    auto* m_opt = verify_cmd->add_option("--m", m_range_str,
                                         "override the probe index range a..b");

    auto* render_cmd = app.add_subcommand("render", "write a domain-coloring PPM");
    std::string render_target;
    render_cmd
        ->add_option("target", render_target, "phi1|phi2|g|h|B|phi")
        ->required()
        ->check(CLI::IsMember(slitdisk::render_targets()));
    int res = 256;
    render_cmd->add_option("--res", res, "square resolution (default 256)")
        ->check(CLI::Range(8, 4096));
    std::string region;
    render_cmd->add_option("--region", region, "viewport name (default per target)");
    std::string render_out;
    render_cmd->add_option("--out", render_out, "output file (default <dir>/<target>.ppm)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        slitdisk::RunConfig cfg;
        if (!config_path.empty())
            cfg.load_file(config_path);
        if (seed_opt->count() > 0)
            cfg.seed = seed;
        if (!out_dir.empty())
            cfg.output_dir = out_dir;
        cfg.validate();

        if (eval_cmd->parsed())
            return run_eval(cfg, eval_target, point_str, mass, eta_str);

        if (verify_cmd->parsed()) {
            if (c_opt->count() > 0)
                std::cout << fmt_real(slitdisk::hoffman_bound(hoffman_c)) << "\n";
            if (theta_opt->count() > 0)
                cfg.theta1 = theta_flag;
            if (m_opt->count() > 0) {
                const auto [lo, hi] = parse_range(m_range_str);
                cfg.slit_m_lo = lo;
                cfg.slit_m_hi = hi;
            }
            return run_verify(cfg, selector);
        }

        // render
        if (region.empty())
            region = slitdisk::render_regions(render_target).front();
        if (!slitdisk::render_region_ok(render_target, region)) {
            std::cerr << "error: target '" << render_target
                      << "' does not accept region '" << region << "'\n";
            return 2;
        }
        const std::string ppm = slitdisk::render_ppm(render_target, region, res, cfg);
        const std::string path = render_out.empty()
                                     ? cfg.output_dir + "/" + render_target + ".ppm"
                                     : render_out;
        slitdisk::write_file_atomic(path, ppm);
        std::cout << path << "\n";
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const slitdisk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
