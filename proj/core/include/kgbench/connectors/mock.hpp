#pragma once

#include <memory>

#include "kgbench/connectors/connector.hpp"

namespace kgbench::connectors {

// Answers with the task case's oracle answer. Throws ConnectorError when no
// task case is supplied.
std::unique_ptr<Connector> MakeOracleConnector(ConnectorSpec spec);

// Answers spec.text to everything.
std::unique_ptr<Connector> MakeConstantConnector(ConnectorSpec spec);

// Answers from spec.script, an array of rules tried in order. A rule with a
// "task" key only applies to that task id. Rule types:
//   {"type": "responses", "responses": [s0, s1, ...]}
//       the i-th assistant turn gets s[i mod n]
//   {"type": "foaf", "persons_factor": f, "links_factor": g}
//       a FOAF dataset with ceil(f * persons) persons and ceil(g * links)
//       links (capped at capacity), sized from the case's size parameters
//   {"type": "oracle-drop", "drop": k}
//       the oracle answer without its last k triples
// Throws ConfigError for malformed scripts at construction.
std::unique_ptr<Connector> MakeScriptedConnector(ConnectorSpec spec);

}  // namespace kgbench::connectors
