#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "killing/kernel_analysis.hpp"
#include "killing/verify.hpp"

namespace killing {

inline constexpr int kSchemaVersion = 1;

/// Header line "n,p,m,q_max,dim,status"; q_max is empty when absent.
std::string table_to_csv(const std::vector<TableRow>& rows);
std::vector<TableRow> table_from_csv(const std::string& text);

/// {schema_version, config, rows}.
nlohmann::json table_to_json(const std::vector<TableRow>& rows, const nlohmann::json& config);
std::vector<TableRow> table_from_json(const nlohmann::json& doc);

std::string table_to_text(const std::vector<TableRow>& rows);

/// {schema_version, config, checks}.
nlohmann::json checks_to_json(const std::vector<Check>& checks, const nlohmann::json& config);
std::vector<Check> checks_from_json(const nlohmann::json& doc);
std::string checks_to_csv(const std::vector<Check>& checks);
std::string checks_to_text(const std::vector<Check>& checks);

/// Kernel basis as a list of vectors, each a list of
/// {"I": [...], "J": [...], "coeff": "num/den"} terms.
nlohmann::json kernel_basis_to_json(const KernelReport& report);
std::string kernel_basis_to_text(const KernelReport& report);

}  // namespace killing
