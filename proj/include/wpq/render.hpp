#pragma once

#include "wpq/constants.hpp"
#include "wpq/counting.hpp"

#include <json.hpp>

#include <string>

namespace wpq {

// Fixed-point decimal with `digits` places, round half away from zero.
// Exact rational in, deterministic string out.
std::string to_decimal(const Rat& v, unsigned digits = 12);

// "lo..hi" rendered as midpoint plus width, both decimal.
std::string mid_string(const BoundedReal& b, unsigned digits = 12);
std::string width_string(const BoundedReal& b, unsigned digits = 12);

nlohmann::json lift_result_json(const LiftResult& r);
nlohmann::json sparsity_json(const SparsityRecord& r);
nlohmann::json constant_json(const BoundedReal& constant, const Rat& exponent,
                             const Rat& error_exponent, int log_power);
nlohmann::json height_json(const ExactHeight& h, unsigned digits = 12);

// CSV rows per the counting schema:
// X,direct_size,fast_size,height_count,predicted_mid,predicted_width,ratio_mid,ratio_width
std::string count_records_csv(const std::vector<CountRecord>& records);

}  // namespace wpq
