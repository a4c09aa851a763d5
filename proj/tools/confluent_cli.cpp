#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "confluent/io.hpp"
#include "confluent/multidepth.hpp"

namespace {

std::string read_all(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void print_stats(const confluent::Drawing& drawing, std::ostream& out) {
    for (const confluent::SliceInfo& info : drawing.slices) {
        out << "slice " << info.pair_index << ": ";
        if (drawing.depth == 1) {
            out << "cover size " << info.depth1_cover_size;
        } else {
            out << "covers computed " << info.covers_computed << " (laid out "
                << info.covers_laid_out << "), cover sizes";
            for (std::size_t s : info.laid_out_cover_sizes) out << ' ' << s;
        }
        out << ", crossings " << info.track_crossings << ", constraint-1 violations "
            << info.constraint1_count << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"confluent - confluent layered graph drawings"};

    std::string input_path, output_path;
    std::string format = "svg", placement = "barycenter", coloring = "rlf";
    int depth = 1;
    bool smooth = false, stats = false;
    double delta = 0.0, delta_y = 0.0;

    app.add_option("--input", input_path, "input file (default: stdin)");
    app.add_option("--output", output_path, "output file (default: stdout)");
    app.add_option("--format", format, "output format: svg or dot (default: svg)");
    app.add_option("--depth", depth, "drawing depth: 1 or 2 (default: 1)");
    app.add_option("--placement", placement,
                   "center placement: barycenter or crossings (default: barycenter)");
    app.add_option("--coloring", coloring,
                   "coloring heuristic: rlf, dsatur or greedy (default: rlf)");
    app.add_flag("--smooth-single-edges", smooth,
                 "draw single-edge bicliques as one curve instead of two");
    auto* delta_opt = app.add_option("--delta", delta, "minimum separation between tree centers");
    auto* delta_y_opt = app.add_option("--delta-y", delta_y, "curve shape offset");
    app.add_flag("--stats", stats,
                 "print per-slice cover sizes, crossing counts and constraint-1 violations to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    confluent::DrawingOptions options;
    if (depth != 1 && depth != 2) {
        std::cerr << "error: unsupported depth " << depth << " (supported: 1, 2)\n";
        return 1;
    }
    options.depth = depth;
    if (format != "svg" && format != "dot") {
        std::cerr << "error: unsupported format '" << format << "' (supported: svg, dot)\n";
        return 1;
    }
    if (placement == "barycenter") {
        options.placement = confluent::PlacementStrategy::Barycenter;
    } else if (placement == "crossings") {
        options.placement = confluent::PlacementStrategy::CrossingReduction;
    } else {
        std::cerr << "error: unsupported placement '" << placement
                  << "' (supported: barycenter, crossings)\n";
        return 1;
    }
    if (coloring == "rlf") {
        options.coloring = confluent::ColoringAlgorithm::Rlf;
    } else if (coloring == "dsatur") {
        options.coloring = confluent::ColoringAlgorithm::Dsatur;
    } else if (coloring == "greedy") {
        options.coloring = confluent::ColoringAlgorithm::Greedy;
    } else {
        std::cerr << "error: unsupported coloring '" << coloring
                  << "' (supported: rlf, dsatur, greedy)\n";
        return 1;
    }
    options.smooth_single_edges = smooth;

    std::string text;
    if (input_path.empty()) {
        text = read_all(std::cin);
    } else {
        std::ifstream in(input_path);
        if (!in) {
            std::cerr << "error: cannot open input file '" << input_path << "'\n";
            return 1;
        }
        text = read_all(in);
    }

    try {
        confluent::ParsedInput parsed = confluent::parse_input(text);
        parsed.config.apply(options);
        if (delta_opt->count() > 0) {
            if (delta <= 0.0) {
                std::cerr << "error: --delta must be positive\n";
                return 1;
            }
            options.min_separation = delta;
        }
        if (delta_y_opt->count() > 0) {
            if (delta_y <= 0.0) {
                std::cerr << "error: --delta-y must be positive\n";
                return 1;
            }
            options.delta_y = delta_y;
        }

        confluent::Drawing drawing = confluent::confluent_layout(parsed.graph, options);
        std::string out =
            format == "svg" ? confluent::emit_svg(drawing) : confluent::emit_dot(drawing);

        if (output_path.empty()) {
            std::cout << out;
        } else {
            std::ofstream file(output_path);
            if (!file) {
                std::cerr << "error: cannot open output file '" << output_path << "'\n";
                return 1;
            }
            file << out;
        }
        if (stats) print_stats(drawing, std::cerr);
        return 0;
    } catch (const confluent::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
