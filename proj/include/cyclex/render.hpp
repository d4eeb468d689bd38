#ifndef CYCLEX_RENDER_HPP
#define CYCLEX_RENDER_HPP

#include <string>

#include <json.hpp>

#include "cyclex/code.hpp"
#include "cyclex/oracle.hpp"

namespace cyclex {

using Json = nlohmann::ordered_json;

Json field_json(const Field& F);
Json code_info_json(const CyclicCode& C);
Json distribution_json(const CyclicCode& C, const ExponentDistribution& dist);
std::string distribution_text(const CyclicCode& C, const ExponentDistribution& dist);
Json factorization_json(const Factorization& fac);
std::string factorization_text(const Factorization& fac);
Json verify_report_json(const oracle::VerifyReport& report);
std::string verify_report_text(const oracle::VerifyReport& report);
Json enumerate_row_json(const CyclicCode& C);
std::string enumerate_row_text(const CyclicCode& C);

} // namespace cyclex

#endif
