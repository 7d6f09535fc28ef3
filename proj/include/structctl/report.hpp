#pragma once

#include <optional>
#include <string_view>

#include <json.hpp>

#include "structctl/controllability.hpp"
#include "structctl/graph.hpp"
#include "structctl/instance_io.hpp"
#include "structctl/oracle.hpp"
#include "structctl/selection.hpp"

namespace structctl {

/// Value of the "schema" key in every JSON report.
inline constexpr std::string_view kReportSchema = "structctl.report/1";

/// Indices in reports are 1-based. Rationals are strings such as "11" or "3/2".

nlohmann::json check_report(const Instance& inst, const SccDecomposition& scc, const ControllabilityVerdict& verdict,
                            const std::optional<ControllabilityVerdict>& cross_check);

/// `outputs` selects y-naming for dual (output selection) results.
nlohmann::json select_report(const Instance& inst, const SelectionResult& result, bool outputs);

nlohmann::json oracle_report(const Instance& inst, const OracleResult& oracle, const std::optional<SelectionResult>& approx,
                             bool outputs);

nlohmann::json error_report(std::string_view command, const Error& error);

}  // namespace structctl
