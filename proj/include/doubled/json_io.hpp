#ifndef DOUBLED_JSON_IO_HPP
#define DOUBLED_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "doubled/miner.hpp"
#include "doubled/recognition.hpp"
#include "doubled/structure.hpp"

namespace doubled {

nlohmann::json certificate_json(const DoubledCertificate& c);

/// Inverse of certificate_json; throws std::invalid_argument on schema
/// violations.
DoubledCertificate certificate_from_json(const nlohmann::json& j);

/// {"class":..., "result":"member"|"non-member", "certificate"|"witness":...}
nlohmann::json outcome_json(const std::string& class_name, const RecognitionOutcome& out);

/// {count, order-histogram, complement-closure, up-to-complement-count}
nlohmann::json obstruction_summary_json(const ObstructionSet& obs);

} // namespace doubled

#endif
