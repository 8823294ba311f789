#ifndef SYMSIG_REPORT_HPP
#define SYMSIG_REPORT_HPP

#include <json.hpp>

#include "symsig/differentials.hpp"
#include "symsig/io.hpp"

namespace symsig {

inline constexpr const char* kToolName = "symsig";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

nlohmann::json ring_to_json(const RingRef& ring);
RingRef ring_from_json(const nlohmann::json& j);

nlohmann::json group_to_json(const GroupFileData& g);
GroupFileData group_from_json(const nlohmann::json& j);

/// Verdict + certificates for the hypersurface / ci-freerank pipelines.
/// `kind` distinguishes the two workflows in the problem section.
nlohmann::json differential_report(const DifferentialSignatureReport& rep,
                                   const std::string& kind);

nlohmann::json quotient_report(const QuotientSignatureReport& rep, const GroupFileData& input);

/// Refusal verdict (pseudo-reflection witness / characteristic divides order).
nlohmann::json quotient_refusal(const GroupFileData& input, std::size_t group_order,
                                std::uint64_t characteristic, const std::string& reason,
                                const std::string& witness);

/// Shared wrapper: schema/tool header, command echo, input hashes. The
/// verdict/certificate payload is spliced in by the caller; `meta` (timing)
/// is excluded from reproducibility comparisons.
nlohmann::json report_envelope(const std::vector<std::string>& command,
                               const std::vector<std::pair<std::string, std::string>>& inputs);

/// Human rendering of a report (one per verdict kind).
std::string render_report(const nlohmann::json& report);

struct VerifyOutcome {
    bool ok = true;
    std::vector<std::string> lines;
};

/// Replays the machine-checkable certificate trail of a report: membership
/// cofactor identities and basis S-pair checks, syzygy relations, and Molien
/// coefficients re-averaged at the sampled degrees.
VerifyOutcome verify_report(const nlohmann::json& report);

}  // namespace symsig

#endif
