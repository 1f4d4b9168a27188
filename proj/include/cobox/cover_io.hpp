#pragma once

#include <string>
#include <string_view>

#include "cobox/cover.hpp"

namespace cobox {

/// {"kind", "size", "elements": [{"block","u","v","vertices","edges"}], "traces": [...]}.
/// Elements without a big ant omit block, u and v.
std::string write_cover_json(const CoverResult& result);
inline std::string write_cover_json(const Cover& cover) { return write_cover_json(CoverResult{cover, {}}); }

/// Reads the layout above; traces are optional. ParseError on malformed text.
CoverResult read_cover_json(std::string_view text);

/// {"d": k, "boxes": {"v": [[lo,hi],...]}}
std::string write_box_json(const BoxRepresentation& boxes);

/// "valid" on a line of its own, or "invalid" followed by one line per finding.
std::string write_verification_report(const VerificationReport& report);

}  // namespace cobox
