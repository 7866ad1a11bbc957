#include "slitdisk/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "slitdisk/errors.hpp"

namespace slitdisk {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

const std::vector<std::string>& allowed_anchors() {
    static const std::vector<std::string> anchors = {
        "Example 2.1", "Lemma 2.5", "Remark 2.6", "Theorem 2.2 proof",
        "final remarks"};
    return anchors;
}

VerificationReport::VerificationReport(RunConfig cfg) : cfg_(std::move(cfg)) {}

void VerificationReport::add(CheckRecord rec) {
    const auto& ok = allowed_anchors();
    if (std::find(ok.begin(), ok.end(), rec.anchor) == ok.end())
        throw DomainError("report: check '" + rec.name +
                          "' registered with unknown anchor '" + rec.anchor + "'");
    for (const auto& c : checks_)
        if (c.name == rec.name)
            throw DomainError("report: duplicate check name '" + rec.name + "'");
    checks_.push_back(std::move(rec));
}

bool VerificationReport::all_passed() const {
    if (checks_.empty())
        return false;
    for (const auto& c : checks_)
        if (!c.pass)
            return false;
    return true;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["schema"] = "slitdisk-report/1";
    nlohmann::ordered_json cfg;
    for (const auto& [k, v] : cfg_.entries())
        cfg[k] = v;
    doc["config"] = std::move(cfg);

    std::vector<const CheckRecord*> sorted;
    sorted.reserve(checks_.size());
    for (const auto& c : checks_)
        sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(),
              [](const CheckRecord* a, const CheckRecord* b) { return a->name < b->name; });

    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckRecord* c : sorted) {
        nlohmann::ordered_json jc;
        jc["name"] = c->name;
        jc["anchor"] = c->anchor;
        nlohmann::ordered_json vals = nlohmann::ordered_json::array();
        for (double v : c->values)
            vals.push_back(fmt17(v)); // strings: bit-stable, locale-free
        jc["values"] = std::move(vals);
        jc["threshold"] = fmt17(c->threshold);
        jc["pass"] = c->pass;
        arr.push_back(std::move(jc));
    }
    doc["checks"] = std::move(arr);
    doc["verdict"] = all_passed() ? "pass" : "fail";
    return doc.dump(2) + "\n";
}

std::string VerificationReport::to_csv() const {
    std::vector<const CheckRecord*> sorted;
    for (const auto& c : checks_)
        sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(),
              [](const CheckRecord* a, const CheckRecord* b) { return a->name < b->name; });
    std::string out = "name,anchor,threshold,pass,values\n";
    for (const CheckRecord* c : sorted) {
        out += c->name + ",\"" + c->anchor + "\"," + fmt17(c->threshold) + ",";
        out += c->pass ? "1" : "0";
        out += ",\"";
        for (std::size_t i = 0; i < c->values.size(); ++i) {
            if (i)
                out += ";";
            out += fmt17(c->values[i]);
        }
        out += "\"\n";
    }
    return out;
}

std::string VerificationReport::to_text_table() const {
    std::size_t width = 4;
    for (const auto& c : checks_)
        width = std::max(width, c.name.size());
    std::string out;
    for (const auto& c : checks_) {
        out += c.name;
        out.append(width + 2 - c.name.size(), ' ');
        out += c.pass ? "pass" : "FAIL";
        if (!c.values.empty()) {
            out += "  [";
            for (std::size_t i = 0; i < std::min<std::size_t>(c.values.size(), 4); ++i) {
                if (i)
                    out += ", ";
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.6g", c.values[i]);
                out += buf;
            }
            if (c.values.size() > 4)
                out += ", ...";
            out += "]";
        }
        out += "\n";
    }
    out += all_passed() ? "verdict: pass\n" : "verdict: FAIL\n";
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path())
        fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw DomainError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out)
            throw DomainError("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

} // namespace slitdisk
