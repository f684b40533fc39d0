#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "d0l/engine.hpp"
#include "d0l/oracle.hpp"
#include "json.hpp"

namespace d0l::cli {

enum ExitCode : int {
    kSuccess = 0,
    kParseError = 1,
    kInternalError = 2,
    kVerifyDisagreement = 3,
};

/// Line-oriented system description:
///
///     # comment
///     alphabet: 0 1 2
///     axiom: 0
///     0 -> 0 1 2
///     1 -> 2
///     2 -> 1
///
/// Every declared letter needs exactly one rule; an empty right-hand side is
/// the empty word. Throws ParseError.
D0LSystem parse_system(std::string_view text);
std::string serialize_system(const D0LSystem& system);

nlohmann::json system_to_json(const D0LSystem& system);
nlohmann::json report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace d0l::cli
