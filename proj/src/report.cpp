#include "gcw/report.hpp"

#include <sstream>

namespace gcw {

std::optional<Format> parse_format(const std::string& name) {
    if (name == "plain") return Format::plain;
    if (name == "latex") return Format::latex;
    if (name == "structured") return Format::structured;
    return std::nullopt;
}

ReportBuilder::ReportBuilder(std::string command) : command_(std::move(command)) {}

void ReportBuilder::kv(const std::string& key, const std::string& value) {
    meta_.emplace_back(key, value);
}

void ReportBuilder::check(const CheckItem& item) { checks_.push_back(item); }

void ReportBuilder::checks(const CheckReport& rep) {
    for (const auto& item : rep.items) checks_.push_back(item);
}

void ReportBuilder::element(const std::string& name, const std::string& rendered) {
    elements_.emplace_back(name, rendered);
}

void ReportBuilder::scalar(const std::string& name, const CircleScalar& value) {
    scalars_.emplace_back(name, value.to_string());
}

void ReportBuilder::note(const std::string& text) { notes_.push_back(text); }

bool ReportBuilder::all_checks_pass() const {
    for (const auto& c : checks_)
        if (!c.pass && !c.skipped) return false;
    return true;
}

std::string ReportBuilder::plain() const {
    std::ostringstream os;
    os << "gcw " << command_ << "\n";
    for (const auto& [k, v] : meta_) os << k << ": " << v << "\n";
    for (const auto& c : checks_) {
        os << "  [" << (c.skipped ? "skip" : c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    // element names align as a table; widths count codepoints, not bytes
    auto display_width = [](const std::string& s) {
        std::size_t n = 0;
        for (unsigned char c : s)
            if ((c & 0xC0) != 0x80) ++n;
        return n;
    };
    std::size_t width = 0;
    for (const auto& [name, text] : elements_) width = std::max(width, display_width(name));
    for (const auto& [name, text] : elements_)
        os << name << std::string(width - display_width(name), ' ') << " = " << text << "\n";
    for (const auto& [name, text] : scalars_) os << name << " = " << text << "\n";
    for (const auto& n : notes_) os << n << "\n";
    os << "result: " << (all_checks_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string ReportBuilder::structured() const {
    StructuredReport rep;
    rep.add("format", "gcw.report.v1");
    rep.add("command", command_);
    for (const auto& [k, v] : meta_) rep.add("meta." + k, v);
    rep.add("check.count", std::to_string(checks_.size()));
    for (std::size_t i = 0; i < checks_.size(); ++i) {
        const auto tag = "check." + std::to_string(i);
        rep.add(tag + ".name", checks_[i].name);
        rep.add(tag + ".status", checks_[i].skipped ? "skip" : checks_[i].pass ? "pass" : "fail");
        if (!checks_[i].detail.empty()) rep.add(tag + ".detail", checks_[i].detail);
    }
    for (const auto& [name, text] : elements_) rep.add("element." + name, text);
    for (const auto& [name, text] : scalars_) rep.add("scalar." + name, text);
    for (std::size_t i = 0; i < notes_.size(); ++i)
        rep.add("note." + std::to_string(i), notes_[i]);
    rep.add("result", all_checks_pass() ? "pass" : "fail");
    return rep.to_text();
}

} // namespace gcw
