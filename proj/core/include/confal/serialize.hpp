#pragma once

#include <map>
#include <string>
#include <vector>

#include "confal/dsl.hpp"
#include "confal/report.hpp"

namespace confal {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// One named check outcome inside a tool report.
struct ReportEntry {
    std::string name;
    std::string verdict;  // pass | fail | window-too-small | unsupported
    std::vector<Witness> witnesses;
    int suppressed = 0;
    std::map<std::string, std::string> data;  // extra key/value payload
};

/// Machine-readable run report; serialization is byte-deterministic for a
/// fixed tool version and input digest.
struct ToolReport {
    std::string input_digest;
    std::vector<ReportEntry> entries;
    std::string error;  // non-empty on parse/usage failures

    void add(const std::string& name, const CheckReport& check);
    bool all_passed() const;
    bool any_failed() const;
    bool any_window_or_unsupported() const;
};

std::string report_to_json(const ToolReport& report);

/// Model JSON: single object for one definition, array otherwise.
std::string definitions_to_json(const std::vector<Definition>& defs);
std::vector<Definition> definitions_from_json(const std::string& text);

/// One LaTeX display per bracket / coproduct line.
std::string definition_to_latex(const Definition& def);

/// DSL text that parses back to the same definition.
std::string definition_to_dsl(const Definition& def);

/// Sequence windows as JSON arrays of canonical polynomial strings.
std::string window_to_json(const std::vector<Poly>& window);
std::vector<Poly> window_from_json(const std::string& text);

}  // namespace confal
