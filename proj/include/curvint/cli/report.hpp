#pragma once

#include <string>

#include "json.hpp"

#include "curvint/degree.hpp"

namespace curvint::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// Serializes with a fixed layout: two-space indentation, keys in insertion
/// order, floating-point values as %.17g, non-finite values as null.
std::string dump_report(const Json& value);

Json to_json(const DegreeResult& degree);
Json to_json(const EtaCheck& row);
Json to_json(const MilnorReport& milnor, const std::vector<int>& betti);
Json to_json(const FoliationReport& foliation);

/// `eta` rows of a verification report as CSV.
std::string verification_csv(const VerificationReport& report);

}  // namespace curvint::cli
