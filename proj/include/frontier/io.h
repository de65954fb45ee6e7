#pragma once

#include <string>
#include <vector>

#include "frontier/analysis.h"
#include "frontier/preprocess.h"
#include "frontier/reconstruct.h"

namespace frontier {

// Instance files pair points to regions by id. Pairing problems (missing or
// orphaned points, duplicate ids) are reported through link_errors so callers
// can treat them as validation failures; structural/parse problems throw
// std::runtime_error.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text,
                            std::vector<std::string>* link_errors = nullptr);

// Preprocessing output cached between phases; byte-deterministic for a fixed
// input so cached and fresh runs can be compared directly.
std::string aux_to_json(const AuxStructure& aux);
AuxStructure aux_from_json(const std::string& text);

std::string run_report_json(const ImplicitFront& front, const CostLedger& ledger,
                            const ParetoCostReport& report);
std::string bound_report_json(const ParetoCostReport& report, int retrieval_lb,
                              long long front_types,  // negative renders as null
                              double ratio_r, double ratio_p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace frontier
