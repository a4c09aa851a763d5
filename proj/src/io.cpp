#include "confluent/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace confluent {

namespace {

const std::map<std::string, std::string> kConfigKeys = {
    {"delta", "minimum center separation"},
    {"delta_y", "curve shape offset"},
    {"node_spacing", "default node spacing"},
    {"layer_gap", "vertical gap between layers"},
};

void set_config(ConfigOverrides& overrides, const std::string& key, double value) {
    if (key == "delta")
        overrides.min_separation = value;
    else if (key == "delta_y")
        overrides.delta_y = value;
    else if (key == "node_spacing")
        overrides.node_spacing = value;
    else if (key == "layer_gap")
        overrides.layer_gap = value;
}

void check_node_name(const std::string& name, int line, int column) {
    if (name.empty()) throw InputError("empty node name", line, column);
    if (name.front() == kCenterIdPrefix)
        throw InputError("node name '" + name + "' uses the reserved prefix '@'", line, column);
}

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return tokens;
}

double parse_number(const Token& tok, int line) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(tok.text, &consumed);
    } catch (const std::exception&) {
        throw InputError("expected a number, got '" + tok.text + "'", line, tok.column);
    }
    if (consumed != tok.text.size() || !std::isfinite(value))
        throw InputError("expected a number, got '" + tok.text + "'", line, tok.column);
    return value;
}

InputDocument parse_line_format(std::string_view text) {
    InputDocument doc;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view line =
            end == std::string_view::npos ? text.substr(pos) : text.substr(pos, end - pos);
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        auto tokens = tokenize(line);
        if (!tokens.empty()) {
            const Token& head = tokens[0];
            if (head.text == "layer") {
                if (tokens.size() < 2)
                    throw InputError("layer needs at least one node name", lineno, head.column);
                std::vector<std::string> names;
                for (std::size_t i = 1; i < tokens.size(); ++i) {
                    check_node_name(tokens[i].text, lineno, tokens[i].column);
                    names.push_back(tokens[i].text);
                }
                doc.layers.push_back(std::move(names));
            } else if (head.text == "edge") {
                if (tokens.size() != 3)
                    throw InputError("edge needs exactly two node names", lineno, head.column);
                check_node_name(tokens[1].text, lineno, tokens[1].column);
                check_node_name(tokens[2].text, lineno, tokens[2].column);
                doc.edges.emplace_back(tokens[1].text, tokens[2].text);
            } else if (head.text == "pos") {
                if (tokens.size() != 3)
                    throw InputError("pos needs a node name and an x value", lineno, head.column);
                check_node_name(tokens[1].text, lineno, tokens[1].column);
                doc.positions[tokens[1].text] = parse_number(tokens[2], lineno);
            } else if (head.text == "set") {
                if (tokens.size() != 3)
                    throw InputError("set needs a key and a value", lineno, head.column);
                if (!kConfigKeys.count(tokens[1].text))
                    throw InputError("unknown setting '" + tokens[1].text + "'", lineno,
                                     tokens[1].column);
                double value = parse_number(tokens[2], lineno);
                if (value <= 0.0)
                    throw InputError("setting '" + tokens[1].text + "' must be positive", lineno,
                                     tokens[2].column);
                doc.config[tokens[1].text] = value;
            } else {
                throw InputError("unknown directive '" + head.text + "'", lineno, head.column);
            }
        }
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return doc;
}

std::pair<int, int> line_column_of_offset(std::string_view text, std::size_t offset) {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

InputDocument parse_json_format(std::string_view text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = line_column_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
        throw InputError(std::string("JSON: ") + e.what(), line, column);
    }
    if (!root.is_object()) throw InputError("top-level JSON value must be an object");

    InputDocument doc;
    for (const auto& [key, value] : root.items()) {
        if (key == "layers") {
            if (!value.is_array()) throw InputError("'layers' must be an array of arrays");
            for (const auto& layer : value) {
                if (!layer.is_array() || layer.empty())
                    throw InputError("each layer must be a nonempty array of node names");
                std::vector<std::string> names;
                for (const auto& name : layer) {
                    if (!name.is_string()) throw InputError("node names must be strings");
                    check_node_name(name.get<std::string>(), 0, 0);
                    names.push_back(name.get<std::string>());
                }
                doc.layers.push_back(std::move(names));
            }
        } else if (key == "edges") {
            if (!value.is_array()) throw InputError("'edges' must be an array of pairs");
            for (const auto& pair : value) {
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
                    !pair[1].is_string())
                    throw InputError("each edge must be a pair of node names");
                check_node_name(pair[0].get<std::string>(), 0, 0);
                check_node_name(pair[1].get<std::string>(), 0, 0);
                doc.edges.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
            }
        } else if (key == "positions") {
            if (!value.is_object()) throw InputError("'positions' must be an object");
            for (const auto& [name, x] : value.items()) {
                if (!x.is_number()) throw InputError("position for '" + name + "' must be a number");
                check_node_name(name, 0, 0);
                doc.positions[name] = x.get<double>();
            }
        } else if (key == "config") {
            if (!value.is_object()) throw InputError("'config' must be an object");
            for (const auto& [name, v] : value.items()) {
                if (!kConfigKeys.count(name)) throw InputError("unknown setting '" + name + "'");
                if (!v.is_number() || v.get<double>() <= 0.0)
                    throw InputError("setting '" + name + "' must be a positive number");
                doc.config[name] = v.get<double>();
            }
        } else {
            throw InputError("unknown key '" + key + "'");
        }
    }
    return doc;
}

ParsedInput document_to_input(const InputDocument& doc) {
    ParsedInput result;
    result.graph.layers = doc.layers;
    result.graph.edges = doc.edges;
    for (const auto& [name, x] : doc.positions) result.graph.node_x[name] = x;
    for (const auto& [key, value] : doc.config) set_config(result.config, key, value);

    ValidationReport report = validate(result.graph);
    if (!report.ok()) throw InputError("invalid graph:\n" + report.to_string());
    return result;
}

std::string fmt3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string fmtg(double v) {
    if (v == 0.0) v = 0.0;  // flush -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt_exact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void ConfigOverrides::apply(DrawingOptions& options) const {
    if (min_separation) options.min_separation = *min_separation;
    if (delta_y) options.delta_y = *delta_y;
    if (node_spacing) options.node_spacing = *node_spacing;
    if (layer_gap) options.layer_gap = *layer_gap;
}

InputError::InputError(std::string message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + message
                                  : message),
      line_(line),
      column_(column) {}

ParsedInput parse_input(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    const bool json = first != std::string_view::npos && text[first] == '{';
    return document_to_input(json ? parse_json_format(text) : parse_line_format(text));
}

std::string format_input(const InputDocument& doc) {
    std::ostringstream out;
    for (const auto& layer : doc.layers) {
        out << "layer";
        for (const auto& name : layer) out << ' ' << name;
        out << '\n';
    }
    for (const auto& [a, b] : doc.edges) out << "edge " << a << ' ' << b << '\n';
    for (const auto& [name, x] : doc.positions) out << "pos " << name << ' ' << fmt_exact(x) << '\n';
    for (const auto& [key, value] : doc.config) out << "set " << key << ' ' << fmt_exact(value) << '\n';
    return out.str();
}

std::string emit_svg(const Drawing& drawing) {
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
    double x1 = -x0, y1 = -x0;
    auto grow = [&](const Point2& p) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    };
    for (const NodeGlyph& g : drawing.node_glyphs) grow(g.pos);
    for (const CubicBezier& s : drawing.segments) {
        grow(s.p0);
        grow(s.p1);
        grow(s.p2);
        grow(s.p3);
    }
    if (drawing.node_glyphs.empty() && drawing.segments.empty()) {
        x0 = y0 = 0.0;
        x1 = y1 = 100.0;
    }
    const double pad = 24.0;
    x0 -= pad;
    y0 -= pad;
    x1 += pad;
    y1 += pad;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt3(x1 - x0) << "\" height=\""
        << fmt3(y1 - y0) << "\" viewBox=\"" << fmt3(x0) << ' ' << fmt3(y0) << ' ' << fmt3(x1 - x0)
        << ' ' << fmt3(y1 - y0) << "\">\n";

    out << "<g fill=\"none\" stroke=\"#20324c\" stroke-width=\"1.5\">\n";
    for (const CubicBezier& s : drawing.segments) {
        out << "<path d=\"M " << fmt3(s.p0.x) << ' ' << fmt3(s.p0.y) << " C " << fmt3(s.p1.x) << ' '
            << fmt3(s.p1.y) << ' ' << fmt3(s.p2.x) << ' ' << fmt3(s.p2.y) << ' ' << fmt3(s.p3.x)
            << ' ' << fmt3(s.p3.y) << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
    for (const NodeGlyph& g : drawing.node_glyphs) {
        out << "<circle cx=\"" << fmt3(g.pos.x) << "\" cy=\"" << fmt3(g.pos.y)
            << "\" r=\"3\" fill=\"#20324c\"/>\n";
        out << "<text x=\"" << fmt3(g.pos.x) << "\" y=\"" << fmt3(g.pos.y - 7.0) << "\">"
            << xml_escape(g.label) << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string emit_dot(const Drawing& drawing) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const NodeGlyph& g : drawing.node_glyphs) {
        out << "  " << dot_quote(g.id) << " [pos=\"" << fmtg(g.pos.x) << ',' << fmtg(-g.pos.y)
            << '"';
        if (g.label != g.id) out << ", label=" << dot_quote(g.label);
        out << "];\n";
    }
    for (const EdgePath& path : drawing.edge_paths) {
        out << "  " << dot_quote(path.upper) << " -- " << dot_quote(path.lower) << " [pos=\"";
        bool first = true;
        for (std::size_t si = 0; si < path.segments.size(); ++si) {
            const CubicBezier& seg = drawing.segments[path.segments[si]];
            auto put = [&](const Point2& p) {
                if (!first) out << ' ';
                first = false;
                out << fmtg(p.x) << ',' << fmtg(-p.y);
            };
            if (si == 0) put(seg.p0);
            put(seg.p1);
            put(seg.p2);
            put(seg.p3);
        }
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace confluent
