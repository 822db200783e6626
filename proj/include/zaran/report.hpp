#pragma once

#include "json.hpp"
#include "zaran/attack.hpp"
#include "zaran/bounds.hpp"
#include "zaran/construct.hpp"
#include "zaran/superconc.hpp"
#include "zaran/witness.hpp"

// JSON views of every result type. Non-finite doubles are written as the
// strings "inf", "-inf" and "nan".
namespace zaran::report {

using nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

json number(double x);
json indices(const VertexSet& s);

json to_json(const bounds::KstCheck& c);
json to_json(const bounds::KstDegreeBound& b);
json to_json(const bounds::HanselCheck& c);
json to_json(const bounds::SymmetricCheck& c);
json to_json(const bounds::AsymmetricCheck& c);
json to_json(const bounds::BoundReport& r);

json to_json(const witness::WitnessResult& r);

json to_json(const construct::ConstructionCertificate& c);
json to_json(const construct::ConstructionOutcome& o);

json to_json(const attack::DeletionTrace& t);
json to_json(const attack::SurvivorStatistics& s);

json to_json(const superconc::ScVerdict& v);
json to_json(const superconc::MiddleDecomposition& d);
json to_json(const superconc::EdgeAuditReport& r);
json to_json(const superconc::TradeoffReport& r);

/// {"version", "rng_version", "command"} header shared by every report.
json envelope(const char* command);

/// Depth-first flattening of objects into dotted keys. Arrays become
/// semicolon-joined scalars; nested arrays of objects are dumped as JSON text.
void flatten(const json& doc, const std::string& prefix, json& out);

}  // namespace zaran::report
