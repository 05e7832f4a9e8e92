#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "backbone/bcoloring.hpp"
#include "backbone/counting.hpp"
#include "backbone/enumeration.hpp"
#include "backbone/tree.hpp"

namespace backbone {

class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Edge list: a line "n", then n - 1 lines "u v". Blank lines and text after
// '#' are ignored.
LabeledTree parse_edge_list(std::istream& in);
LabeledTree parse_edge_list(std::string_view text);
std::string format_edge_list(const LabeledTree& tree);

// Prüfer code: "n", then the n - 2 entries separated by whitespace.
PruferSequence parse_prufer(std::istream& in);
PruferSequence parse_prufer(std::string_view text);
std::string format_prufer(const PruferSequence& code);

// One line "id color" per vertex, then one line "u v red" per red edge.
std::string format_coloring_text(const Tricoloring& coloring);
Tricoloring parse_coloring_text(std::string_view text);

// {"colors": ["green", ...], "red_edges": [[u, v], ...]}
nlohmann::json coloring_to_json(const Tricoloring& coloring);
Tricoloring coloring_from_json(const nlohmann::json& j);

nlohmann::json backbone_to_json(const BackboneReport& report);
std::string format_backbone_text(const BackboneReport& report);

// Big integers are written as decimal strings.
nlohmann::json summary_to_json(const CountSummary& summary);

// CSV "n,trees,brown,red,green,vc,mm".
std::string totals_csv_header();
std::string totals_csv_row(const EnumerationTotals& totals);
nlohmann::json totals_to_json(const EnumerationTotals& totals);

}  // namespace backbone
