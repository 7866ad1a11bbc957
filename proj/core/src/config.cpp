#include "slitdisk/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "slitdisk/errors.hpp"

namespace slitdisk {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_cplx(cplx v) {
    return fmt_double(v.real()) + "," + fmt_double(v.imag());
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size())
            throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw DomainError("config: bad numeric value for " + key);
    }
}

int parse_int(const std::string& key, const std::string& v) {
    const double x = parse_double(key, v);
    if (x != std::floor(x))
        throw DomainError("config: expected integer for " + key);
    return static_cast<int>(x);
}

cplx parse_cplx(const std::string& key, const std::string& v) {
    const std::size_t comma = v.find(',');
    if (comma == std::string::npos)
        return cplx(parse_double(key, v), 0.0);
    return cplx(parse_double(key, trim(v.substr(0, comma))),
                parse_double(key, trim(v.substr(comma + 1))));
}

} // namespace

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
    std::vector<std::pair<std::string, std::string>> e;
    auto put = [&](const char* k, const std::string& v) { e.emplace_back(k, v); };
    put("run.seed", std::to_string(seed));
    put("run.output_dir", output_dir);
    put("counterexample.a", fmt_cplx(a));
    put("counterexample.n_max", std::to_string(n_max));
    put("counterexample.eval_tol", fmt_double(eval_tol));
    put("counterexample.zero_radius", fmt_double(zero_radius));
    put("counterexample.path_k_lo", std::to_string(path_k_lo));
    put("counterexample.path_k_hi", std::to_string(path_k_hi));
    put("counterexample.floor_min", fmt_double(floor_min));
    put("counterexample.control_decay_max", fmt_double(control_decay_max));
    put("metric.samples", std::to_string(metric_samples));
    put("metric.radius", fmt_double(metric_radius));
    put("metric.tol", fmt_double(metric_tol));
    put("metric.deviation_tol", fmt_double(deviation_tol));
    put("thin.k_lo", std::to_string(thin_k_lo));
    put("thin.k_hi", std::to_string(thin_k_hi));
    put("thin.window", std::to_string(thin_window));
    put("thin.prefix_m", std::to_string(thin_prefix_m));
    put("thin.delta_k10_min", fmt_double(delta_k10_min));
    put("thin.delta_k30_min", fmt_double(delta_k30_min));
    put("hoffman.bound_at_half", fmt_double(hoffman_half));
    put("hoffman.tol", fmt_double(hoffman_tol));
    put("slit.theta1", fmt_double(theta1));
    put("slit.m_lo", std::to_string(slit_m_lo));
    put("slit.m_hi", std::to_string(slit_m_hi));
    put("slit.constant_c", fmt_double(slit_c));
    put("slit.constant_c_tol", fmt_double(slit_c_tol));
    put("slit.floor_min", fmt_double(slit_floor_min));
    put("slit.diagonal_tol", fmt_double(diagonal_tol));
    put("map.samples", std::to_string(map_samples));
    put("map.roundtrip_tol", fmt_double(roundtrip_tol));
    put("map.radial_tol", fmt_double(radial_tol));
    put("map.closed_form_tol", fmt_double(closed_form_tol));
    put("map.boundary_samples", std::to_string(boundary_samples));
    put("lemma25.n_max", std::to_string(lemma_n_max));
    put("lemma25.w_samples", std::to_string(lemma_w_samples));
    put("lemma25.segment_max", std::to_string(segment_max));
    put("lemma25.w_min_abs", fmt_double(w_min_abs));
    put("remark26.a1", fmt_cplx(variant_a1));
    put("remark26.a2", fmt_cplx(variant_a2));
    return e;
}

std::string RunConfig::to_text() const {
    std::ostringstream out;
    std::string section;
    for (const auto& [key, value] : entries()) {
        const std::size_t dot = key.find('.');
        const std::string sec = key.substr(0, dot);
        if (sec != section) {
            if (!section.empty())
                out << "\n";
            out << "[" << sec << "]\n";
            section = sec;
        }
        out << key.substr(dot + 1) << " = " << value << "\n";
    }
    return out.str();
}

void RunConfig::parse_into(const std::string& text) {
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw DomainError("config: malformed section at line " +
                                  std::to_string(lineno));
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw DomainError("config: expected key = value at line " +
                              std::to_string(lineno));
        const std::string key = section + "." + trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));

        if (key == "run.seed")
            seed = static_cast<unsigned long>(parse_double(key, value));
        else if (key == "run.output_dir")
            output_dir = value;
        else if (key == "counterexample.a")
            a = parse_cplx(key, value);
        else if (key == "counterexample.n_max")
            n_max = parse_int(key, value);
        else if (key == "counterexample.eval_tol")
            eval_tol = parse_double(key, value);
        else if (key == "counterexample.zero_radius")
            zero_radius = parse_double(key, value);
        else if (key == "counterexample.path_k_lo")
            path_k_lo = parse_int(key, value);
        else if (key == "counterexample.path_k_hi")
            path_k_hi = parse_int(key, value);
        else if (key == "counterexample.floor_min")
            floor_min = parse_double(key, value);
        else if (key == "counterexample.control_decay_max")
            control_decay_max = parse_double(key, value);
        else if (key == "metric.samples")
            metric_samples = parse_int(key, value);
        else if (key == "metric.radius")
            metric_radius = parse_double(key, value);
        else if (key == "metric.tol")
            metric_tol = parse_double(key, value);
        else if (key == "metric.deviation_tol")
            deviation_tol = parse_double(key, value);
        else if (key == "thin.k_lo")
            thin_k_lo = parse_int(key, value);
        else if (key == "thin.k_hi")
            thin_k_hi = parse_int(key, value);
        else if (key == "thin.window")
            thin_window = parse_int(key, value);
        else if (key == "thin.prefix_m")
            thin_prefix_m = parse_int(key, value);
        else if (key == "thin.delta_k10_min")
            delta_k10_min = parse_double(key, value);
        else if (key == "thin.delta_k30_min")
            delta_k30_min = parse_double(key, value);
        else if (key == "hoffman.bound_at_half")
            hoffman_half = parse_double(key, value);
        else if (key == "hoffman.tol")
            hoffman_tol = parse_double(key, value);
        else if (key == "slit.theta1")
            theta1 = parse_double(key, value);
        else if (key == "slit.m_lo")
            slit_m_lo = parse_int(key, value);
        else if (key == "slit.m_hi")
            slit_m_hi = parse_int(key, value);
        else if (key == "slit.constant_c")
            slit_c = parse_double(key, value);
        else if (key == "slit.constant_c_tol")
            slit_c_tol = parse_double(key, value);
        else if (key == "slit.floor_min")
            slit_floor_min = parse_double(key, value);
        else if (key == "slit.diagonal_tol")
            diagonal_tol = parse_double(key, value);
        else if (key == "map.samples")
            map_samples = parse_int(key, value);
        else if (key == "map.roundtrip_tol")
            roundtrip_tol = parse_double(key, value);
        else if (key == "map.radial_tol")
            radial_tol = parse_double(key, value);
        else if (key == "map.closed_form_tol")
            closed_form_tol = parse_double(key, value);
        else if (key == "map.boundary_samples")
            boundary_samples = parse_int(key, value);
        else if (key == "lemma25.n_max")
            lemma_n_max = parse_int(key, value);
        else if (key == "lemma25.w_samples")
            lemma_w_samples = parse_int(key, value);
        else if (key == "lemma25.segment_max")
            segment_max = parse_int(key, value);
        else if (key == "lemma25.w_min_abs")
            w_min_abs = parse_double(key, value);
        else if (key == "remark26.a1")
            variant_a1 = parse_cplx(key, value);
        else if (key == "remark26.a2")
            variant_a2 = parse_cplx(key, value);
        else
            throw DomainError("config: unknown key " + key);
    }
    validate();
}

RunConfig RunConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    RunConfig cfg;
    cfg.parse_into(buf.str());
    return cfg;
}

void RunConfig::validate() const {
    auto positive = [](double v, const char* what) {
        if (!(v > 0.0))
            throw DomainError(std::string("config: ") + what + " must be positive");
    };
    positive(eval_tol, "eval_tol");
    positive(metric_tol, "metric tol");
    positive(deviation_tol, "deviation tol");
    positive(roundtrip_tol, "roundtrip tol");
    positive(hoffman_tol, "hoffman tol");
    positive(slit_c_tol, "slit constant tol");
    if (a.imag() == 0.0)
        throw DomainError("config: the distinguished zero a must be off the real axis");
    if (!(std::abs(a) < 1.0))
        throw DomainError("config: a must be interior");
    if (n_max < 5)
        throw DomainError("config: n_max must be at least 5");
    if (!(zero_radius > 0.0 && zero_radius < 1.0))
        throw DomainError("config: zero_radius must be in (0,1)");
    if (path_k_lo < 2 || path_k_hi < path_k_lo)
        throw DomainError("config: bad path k range");
    if (thin_k_lo < 2 || thin_k_hi < thin_k_lo || thin_window < thin_k_hi)
        throw DomainError("config: bad thin range");
    if (thin_prefix_m < 1 || thin_prefix_m >= thin_k_lo)
        throw DomainError("config: thin prefix_m must be below k_lo");
    if (slit_m_lo < 2 || slit_m_hi < slit_m_lo)
        throw DomainError("config: bad slit m range");
    if (metric_samples < 1 || map_samples < 1 || lemma_w_samples < 1)
        throw DomainError("config: sample counts must be positive");
    if (boundary_samples < 16)
        throw DomainError("config: boundary_samples must be at least 16");
}

} // namespace slitdisk
