#pragma once

// Deterministic renderers for frequency trees and proportion-bar diagrams.
//
// Every coordinate is computed in exact rational arithmetic and printed with
// at most two decimals (halves rounded away from zero), so output bytes do
// not depend on the platform's floating-point formatting.

#include "bayesproof/error.hpp"
#include "bayesproof/frequency_tree.hpp"
#include "bayesproof/posterior.hpp"
#include "bayesproof/rational.hpp"
#include "bayesproof/scenario.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace bayesproof {

struct RenderStyle {
    int width = 640;
    int height = 360;
    int font_size = 14;
    std::string hypothesis_color = "#1f77b4";
    std::string complement_color = "#ff7f0e";
    bool show_residuals = false;
};

inline bool is_hex_color(std::string_view c) {
    if (c.size() != 7 || c[0] != '#') return false;
    return std::all_of(c.begin() + 1, c.end(), [](char ch) {
        return (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f') || (ch >= 'A' && ch <= 'F');
    });
}

/// Throws RangeError for non-positive sizes or malformed colors.
inline void validate(const RenderStyle& style) {
    if (style.width <= 0 || style.height <= 0) throw RangeError("render size must be positive");
    if (style.font_size <= 0) throw RangeError("font size must be positive");
    if (!is_hex_color(style.hypothesis_color) || !is_hex_color(style.complement_color))
        throw RangeError("colors must be 6-digit hex literals such as #1f77b4");
}

namespace detail {

inline std::string count_text(const Rational& count) {
    return to_exact_string(count);
}

inline std::string signed_text(const Rational& r) {
    std::string s = to_exact_string(r);
    return r > 0 ? "+" + s : s;
}

inline std::string percent_text(const Rational& p) {
    return to_fixed_string(p * 100, 1) + "%";
}

inline std::string coord(const Rational& r) {
    return to_fixed_string(r, 2, true);
}

inline std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
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

/// Minimal SVG 1.1 writer; elements come out in call order, one per line.
class SvgWriter {
public:
    SvgWriter(int width, int height, int font_size) {
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
             << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\""
             << font_size << "\">\n";
    }

    void rect(std::string_view id, const Rational& x, const Rational& y, const Rational& w, const Rational& h,
              std::string_view fill, std::string_view stroke, std::string_view extra = {}) {
        out_ << "  <rect";
        if (!id.empty()) out_ << " id=\"" << id << '"';
        out_ << " x=\"" << coord(x) << "\" y=\"" << coord(y) << "\" width=\"" << coord(w) << "\" height=\""
             << coord(h) << "\" fill=\"" << fill << "\" stroke=\"" << stroke << '"';
        if (!extra.empty()) out_ << ' ' << extra;
        out_ << "/>\n";
    }

    void line(std::string_view id, const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2,
              std::string_view stroke, int stroke_width) {
        out_ << "  <line";
        if (!id.empty()) out_ << " id=\"" << id << '"';
        out_ << " x1=\"" << coord(x1) << "\" y1=\"" << coord(y1) << "\" x2=\"" << coord(x2) << "\" y2=\""
             << coord(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << stroke_width << "\"/>\n";
    }

    void text(const Rational& x, const Rational& y, std::string_view content, std::string_view anchor = "middle",
              std::string_view extra = {}) {
        out_ << "  <text x=\"" << coord(x) << "\" y=\"" << coord(y) << "\" text-anchor=\"" << anchor << '"';
        if (!extra.empty()) out_ << ' ' << extra;
        out_ << '>' << xml_escape(content) << "</text>\n";
    }

    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

private:
    std::ostringstream out_;
};

class TextCanvas {
public:
    explicit TextCanvas(std::size_t width) : width_(width) {}

    void add_line() { lines_.emplace_back(width_, ' '); }

    /// Writes `text` so that its middle character lands on column `center`.
    void put_centered(std::size_t center, std::string_view text) {
        std::string& line = lines_.back();
        std::size_t start = center >= (text.size() - 1) / 2 ? center - (text.size() - 1) / 2 : 0;
        if (start + text.size() > line.size()) line.resize(start + text.size(), ' ');
        line.replace(start, text.size(), text);
    }

    void put(std::size_t column, char c) { lines_.back()[column] = c; }

    void hline(std::size_t from, std::size_t to) {
        std::string& line = lines_.back();
        for (std::size_t i = from; i <= to; ++i) line[i] = '-';
    }

    std::string str() const {
        std::string out;
        for (const std::string& line : lines_) {
            std::size_t end = line.find_last_not_of(' ');
            out.append(line, 0, end == std::string::npos ? 0 : end + 1);
            out += '\n';
        }
        return out;
    }

private:
    std::size_t width_;
    std::vector<std::string> lines_;
};

inline constexpr std::array<std::string_view, 4> leaf_roles{"hits", "H, not E", "false alarms", "not H, not E"};

} // namespace detail

/// Fixed-width drawing of the tree: the population, then the hypothesis
/// split, then the four leaves in branch order, followed by a legend and the
/// hits / (hits + false alarms) shortcut. Lines end in '\n'.
inline std::string render_tree_text(const FrequencyTree& tree) {
    using detail::count_text;
    const auto leaves = tree.leaves();
    std::vector<std::string> cells{count_text(tree.hypothesis_count), count_text(tree.complement_count)};
    for (const Rational& leaf : leaves) cells.push_back(count_text(leaf));
    std::size_t column = 16;
    for (const std::string& c : cells) column = std::max(column, c.size() + 2);
    for (std::string_view role : detail::leaf_roles) column = std::max(column, role.size() + 2);

    // leaf i is centered at column * (2i + 1) / 2; parents at column, 3 * column
    auto leaf_center = [column](std::size_t i) { return column * (2 * i + 1) / 2; };
    const std::size_t left = column;
    const std::size_t right = 3 * column;
    const std::size_t root = 2 * column;

    detail::TextCanvas canvas{4 * column};
    canvas.add_line();
    canvas.put_centered(root, std::to_string(tree.population));
    canvas.add_line();
    canvas.hline(left, right);
    canvas.put(left, '+');
    canvas.put(root, '+');
    canvas.put(right, '+');
    canvas.add_line();
    canvas.put(left, '|');
    canvas.put(right, '|');
    canvas.add_line();
    canvas.put_centered(left, cells[0]);
    canvas.put_centered(right, cells[1]);
    canvas.add_line();
    canvas.put_centered(left, "H");
    canvas.put_centered(right, "not H");
    canvas.add_line();
    canvas.hline(leaf_center(0), leaf_center(1));
    canvas.hline(leaf_center(2), leaf_center(3));
    for (std::size_t i = 0; i < 4; ++i) canvas.put(leaf_center(i), '+');
    canvas.put(left, '+');
    canvas.put(right, '+');
    canvas.add_line();
    for (std::size_t i = 0; i < 4; ++i) canvas.put(leaf_center(i), '|');
    canvas.add_line();
    for (std::size_t i = 0; i < 4; ++i) canvas.put_centered(leaf_center(i), cells[2 + i]);
    canvas.add_line();
    for (std::size_t i = 0; i < 4; ++i) canvas.put_centered(leaf_center(i), detail::leaf_roles[i]);

    std::ostringstream out;
    out << canvas.str() << '\n'
        << "H: " << tree.hypothesis_label << '\n'
        << "E: " << tree.evidence_label << '\n';

    const Rational flagged = tree.hits + tree.false_alarms;
    if (flagged == 0) {
        out << "hits / (hits + false alarms) is undefined: no individual shows the evidence\n";
    } else {
        out << "hits / (hits + false alarms) = " << count_text(tree.hits) << " / (" << count_text(tree.hits)
            << " + " << count_text(tree.false_alarms) << ") = "
            << to_significant_string(tree.hits / flagged, 6) << '\n';
    }

    if (!tree.counts_exact) {
        if (std::all_of(leaves.begin(), leaves.end(), [](const Rational& c) { return is_integral(c); })) {
            out << "counts rounded by largest remainder; residuals:";
            for (const Rational& r : tree.rounding_residuals) out << ' ' << detail::signed_text(r);
            out << '\n';
        } else {
            out << "counts are exact fractions, not whole individuals\n";
        }
    }
    return out.str();
}

/// SVG frequency tree. All x coordinates are fixed fractions of the style
/// width and all y coordinates fixed fractions of the height, so the layout
/// scales linearly.
inline std::string render_tree_svg(const FrequencyTree& tree, const RenderStyle& style = {}) {
    validate(style);
    const Rational w{style.width};
    const Rational h{style.height};
    const Rational box_w = w / 8;
    const Rational box_h = h * Rational{1, 9};
    const std::array<Rational, 3> row_y{h * Rational{3, 20}, h * Rational{9, 20}, h * Rational{3, 4}};
    const std::string neutral = "#444444";

    struct Node {
        Rational cx;
        std::size_t row;
        std::string count;
        std::string caption;
        std::string color;
    };
    const auto leaves = tree.leaves();
    std::vector<Node> nodes{
        {w / 2, 0, detail::count_text(Rational{tree.population}), "population", neutral},
        {w / 4, 1, detail::count_text(tree.hypothesis_count), "H", style.hypothesis_color},
        {w * 3 / 4, 1, detail::count_text(tree.complement_count), "not H", style.complement_color},
    };
    for (std::size_t i = 0; i < 4; ++i)
        nodes.push_back({w * Rational{static_cast<long>(2 * i + 1), 8}, 2, detail::count_text(leaves[i]),
                         std::string{detail::leaf_roles[i]}, i < 2 ? style.hypothesis_color : style.complement_color});

    detail::SvgWriter svg{style.width, style.height, style.font_size};
    svg.text(w / 2, h * Rational{1, 18}, "Frequency tree", "middle", "font-weight=\"bold\"");

    // edges first so boxes paint over their ends
    const std::array<std::pair<std::size_t, std::size_t>, 6> edges{{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}};
    for (const auto& [from, to] : edges) {
        svg.line("", nodes[from].cx, row_y[nodes[from].row] + box_h / 2, nodes[to].cx, row_y[nodes[to].row] - box_h / 2,
                 neutral, 1);
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node& n = nodes[i];
        const Rational& cy = row_y[n.row];
        svg.rect("node-" + std::to_string(i), n.cx - box_w / 2, cy - box_h / 2, box_w, box_h, n.color, n.color,
                 "fill-opacity=\"0.15\"");
        svg.text(n.cx, cy + Rational{style.font_size, 3}, n.count, "middle", "font-weight=\"bold\"");
        svg.text(n.cx, cy + box_h / 2 + Rational{style.font_size} + 2, n.caption);
    }

    if (style.show_residuals && !tree.counts_exact) {
        for (std::size_t i = 0; i < 4; ++i) {
            const Node& n = nodes[3 + i];
            svg.text(n.cx, row_y[2] + box_h / 2 + Rational{2 * style.font_size} + 4,
                     "residual " + detail::signed_text(tree.rounding_residuals[i]));
        }
    }

    const Rational legend_y = h * Rational{17, 18};
    std::string legend = "H: " + tree.hypothesis_label + "   E: " + tree.evidence_label;
    const Rational flagged = tree.hits + tree.false_alarms;
    if (flagged != 0)
        legend += "   hits / (hits + false alarms) = " + detail::count_text(tree.hits) + "/" +
                  detail::count_text(flagged);
    svg.text(w / 2, legend_y, legend);
    return svg.finish();
}

/// Geometry of the proportion-bar diagram, exposed for inspection and tests.
/// The top bar spans the full drawing width and splits at the base rate. The
/// bottom bar is the evidence slice: its width is p(E) times the top bar's
/// and it splits at the posterior. It is placed so that its split sits at the
/// posterior's position on the top bar's axis, which makes the middle
/// connector lean right exactly when the posterior exceeds the prior, i.e.
/// when the hit rate exceeds the false-alarm rate.
struct BarLayout {
    Rational bar_left;
    Rational bar_width;
    Rational top_split;
    Rational bottom_left;
    Rational bottom_width;
    Rational bottom_split;
};

inline BarLayout proportion_bar_layout(const Scenario& s, const RenderStyle& style) {
    const PosteriorBreakdown b = compute_posterior(s);
    const Rational w{style.width};
    BarLayout layout;
    layout.bar_left = w / 16;
    layout.bar_width = w * Rational{7, 8};
    layout.top_split = layout.bar_left + layout.bar_width * s.base_rate.value();
    layout.bottom_width = layout.bar_width * b.evidence_marginal.value();
    layout.bottom_split = layout.bar_left + layout.bar_width * b.posterior.value();
    layout.bottom_left = layout.bottom_split - layout.bar_width * b.joint_hit.value();
    return layout;
}

/// Two stacked bars: the prior split of everyone, and the split among those
/// showing the evidence. Throws DegenerateEvidence when p(E) = 0.
inline std::string render_proportion_bars_svg(const Scenario& s, const RenderStyle& style = {}) {
    validate(style);
    const PosteriorBreakdown b = compute_posterior(s);
    const BarLayout g = proportion_bar_layout(s, style);
    const Rational h{style.height};
    const Rational top_y = h * Rational{2, 9};
    const Rational bar_h = h / 9;
    const Rational bottom_y = h * Rational{5, 9};
    const Rational fs{style.font_size};
    const std::string neutral = "#444444";

    detail::SvgWriter svg{style.width, style.height, style.font_size};
    svg.text(Rational{style.width} / 2, h / 12, "Prior and posterior proportions", "middle", "font-weight=\"bold\"");

    svg.rect("top-hypothesis", g.bar_left, top_y, g.top_split - g.bar_left, bar_h, style.hypothesis_color, neutral);
    svg.rect("top-complement", g.top_split, top_y, g.bar_left + g.bar_width - g.top_split, bar_h,
             style.complement_color, neutral);
    svg.rect("bottom-hypothesis", g.bottom_left, bottom_y, g.bottom_split - g.bottom_left, bar_h,
             style.hypothesis_color, neutral);
    svg.rect("bottom-complement", g.bottom_split, bottom_y, g.bottom_left + g.bottom_width - g.bottom_split, bar_h,
             style.complement_color, neutral);

    const Rational from_y = top_y + bar_h;
    svg.line("connector-left", g.bar_left, from_y, g.bottom_left, bottom_y, neutral, 1);
    svg.line("connector-split", g.top_split, from_y, g.bottom_split, bottom_y, neutral, 3);
    svg.line("connector-right", g.bar_left + g.bar_width, from_y, g.bottom_left + g.bottom_width, bottom_y, neutral,
             1);

    svg.text(g.bar_left, top_y - fs / 2, "p(H) = " + detail::percent_text(s.base_rate.value()), "start");
    svg.text(g.bar_left + g.bar_width, top_y - fs / 2,
             "p(not H) = " + detail::percent_text(1 - s.base_rate.value()), "end");
    svg.text(g.bottom_split, bottom_y + bar_h + fs + 4,
             "p(H | E) = " + detail::percent_text(b.posterior.value()) + "   p(E) = " +
                 detail::percent_text(b.evidence_marginal.value()));
    svg.text(Rational{style.width} / 2, h * Rational{17, 18},
             "H: " + s.hypothesis_label + "   E: " + s.evidence_label + "   p(E | H) = " +
                 detail::percent_text(s.hit_rate.value()) + "   p(E | not H) = " +
                 detail::percent_text(s.false_alarm_rate.value()));
    return svg.finish();
}

} // namespace bayesproof
