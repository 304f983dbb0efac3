#ifndef RFLAMP_REPORT_HPP
#define RFLAMP_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "rflamp/detection.hpp"
#include "rflamp/extremal.hpp"

namespace rflamp {

inline constexpr const char* kVersion = "0.1.0";

using ojson = nlohmann::ordered_json;

enum class OutputFormat { human, json, csv };
OutputFormat parse_format(const std::string& name);

/// One run's emitted record: config echo, payload, warnings. Wall time is
/// deliberately absent so that equal configs produce byte-identical output;
/// the CLI prints timing to stderr instead.
struct RunReport {
    ojson config;
    ojson result;
    std::vector<std::string> warnings;

    std::string csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    std::vector<std::string> human_lines;
};

std::string emit(const RunReport& report, OutputFormat format);
std::string csv_quote(const std::string& field);
std::string format_double(double v);

// payload builders (fill result + csv + human consistently)
void fill_divisibility(RunReport& r, const DivisibilityResult& d);
void fill_full_oracle(RunReport& r, const DivisibilityResult& d, const FullOracleResult& f);
void fill_rf_table(RunReport& r, const std::vector<RFRecord>& records);
void fill_certificate(RunReport& r, const LampElement& x, const UpperBoundCertificate& c);
void fill_lcm_profiles(RunReport& r, const std::vector<LcmProfile>& profiles);
void fill_witness_audit(RunReport& r, const WitnessAudit& a);
void fill_conjecture(RunReport& r, const std::vector<AlmostPeriodicProfile>& profiles);
void fill_order(RunReport& r, const Poly& g, std::int64_t order);
void fill_factor(RunReport& r, const Poly& f, const FactoredPoly& fp);
void fill_wordlen(RunReport& r, const LampElement& x, std::int64_t exact, const WordLengthBound& b);
void fill_ball(RunReport& r, const BallIndex& ball);

/// least-squares slope of log rf against log n, reporting only
double rf_loglog_slope(const std::vector<RFRecord>& records);

}  // namespace rflamp

#endif
