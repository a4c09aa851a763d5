#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "confluent/graph.hpp"
#include "confluent/multidepth.hpp"

namespace confluent {

/// Parsed input file before conversion into a LayeredGraph.
struct InputDocument {
    std::vector<std::vector<std::string>> layers;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, double> positions;
    std::map<std::string, double> config;  // delta, delta_y, node_spacing, layer_gap
};

/// Config values read from the input file; applied on top of the defaults,
/// below command-line overrides.
struct ConfigOverrides {
    std::optional<double> min_separation;
    std::optional<double> delta_y;
    std::optional<double> node_spacing;
    std::optional<double> layer_gap;

    void apply(DrawingOptions& options) const;
};

/// Input rejection: syntax errors carry a line/column (1-based, 0 = not
/// applicable); semantic errors carry the validation report text.
class InputError : public std::runtime_error {
public:
    InputError(std::string message, int line = 0, int column = 0);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct ParsedInput {
    LayeredGraph graph;
    ConfigOverrides config;
};

/// Accepts either the line-oriented format (`layer`, `edge`, `pos`, `set`
/// directives, `#` comments) or a JSON object with keys `layers`, `edges`,
/// `positions`, `config`.  Unknown directives/keys are rejected; the built
/// graph must pass validate().  Throws InputError.
ParsedInput parse_input(std::string_view text);

/// Line-oriented rendering of a document; parse_input(format_input(doc))
/// reproduces the same graph.
std::string format_input(const InputDocument& doc);

/// Standalone SVG: one path per track segment, one circle + label per node
/// glyph, fixed 3-decimal coordinates, deterministic element order.
std::string emit_svg(const Drawing& drawing);

/// DOT graph with pos attributes on nodes and cubic spline pos attributes
/// on edges (point count = 3*segments + 1), so a position-respecting
/// renderer reproduces the layout as computed.  y is flipped because DOT's
/// y axis grows upward.
std::string emit_dot(const Drawing& drawing);

}  // namespace confluent
