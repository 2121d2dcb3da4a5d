#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "defectkit/cli/commands.hpp"
#include "defectkit/extension_graph.hpp"
#include "defectkit/verifier.hpp"

namespace defectkit::cli {

using Json = nlohmann::ordered_json;

std::string letter_str(const AlphabetPtr& alphabet, Letter a);
Json letters_json(const AlphabetPtr& alphabet, const std::vector<Letter>& letters);
Json words_json(const WordSet& words);
Json words_json(const std::vector<Word>& words);

Json classification_json(const GraphClassification& c);
Json graph_json(const ExtensionGraph& g);
Json extensions_json(const ExtensionData& e);

std::string verdict_label(const DefectVerdict& v);
Json verdict_json(const DefectVerdict& v);
Json witness_json(const WitnessReport& r);
Json audit_json(const AuditReport& r);

/// Every report: tool, version, command, config echo, n_max, horizon,
/// verdict, witnesses, then the command-specific body.
Json envelope(const std::string& command, const RunConfig& config, const std::string& verdict, Json witnesses,
              Json report);

std::string render(const Json& doc, OutputFormat format);

}  // namespace defectkit::cli
