#pragma once

#include "gcw/render.hpp"
#include "gcw/scalar.hpp"
#include "gcw/weil.hpp"

namespace gcw {

enum class Format { plain, latex, structured };

std::optional<Format> parse_format(const std::string& name);

/// Deterministic assembly of command output. Content is appended in a fixed
/// order by the caller; `plain` and `structured` render the same data, and
/// the structured text round-trips through parse_structured byte-exactly.
class ReportBuilder {
  public:
    explicit ReportBuilder(std::string command);

    void kv(const std::string& key, const std::string& value);
    void check(const CheckItem& item);
    void checks(const CheckReport& rep);
    void element(const std::string& name, const std::string& rendered);
    void scalar(const std::string& name, const CircleScalar& value);
    void note(const std::string& text);

    bool all_checks_pass() const;
    std::size_t check_count() const { return checks_.size(); }

    std::string plain() const;
    std::string structured() const;
    std::string render(Format f) const { return f == Format::structured ? structured() : plain(); }

  private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<CheckItem> checks_;
    std::vector<std::pair<std::string, std::string>> elements_;
    std::vector<std::pair<std::string, std::string>> scalars_;
    std::vector<std::string> notes_;
};

} // namespace gcw
