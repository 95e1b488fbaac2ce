#pragma once

#include <string>

#include "anyonkit/model.hpp"

namespace anyonkit {

// JSON export of a full model: labels, fusion triples, every admissible F/R
// symbol (materialized), S and T; values in the exact text serialization.
std::string model_to_json(const AnyonModel& m);
AnyonModel model_from_json(const std::string& json_text);

}  // namespace anyonkit
