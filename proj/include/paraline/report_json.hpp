#pragma once

#include <json.hpp>

#include "paraline/paradox.hpp"
#include "paraline/rigid.hpp"

namespace paraline {

nlohmann::json to_json(const ParadoxInstance& inst, const PartitionReport& rep);
nlohmann::json to_json(const ParadoxInstance& inst, const ReassemblyReport& rep);
nlohmann::json to_json(const ParadoxInstance& inst, const MeasureAuditReport& rep);
nlohmann::json to_json(const CertReport& rep);
nlohmann::json to_json(const AuditReport& rep);

/// Combined verification report: {window, rank, counts, coverage,
/// violations, pass}, with the free-action certificate under "free_action"
/// when present.
nlohmann::json verification_json(const ParadoxInstance& inst, const PartitionReport& part,
                                 const ReassemblyReport& re, const CertReport* cert);

}  // namespace paraline
