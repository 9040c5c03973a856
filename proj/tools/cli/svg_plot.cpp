#include "cli/svg_plot.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace lislab::cli {

namespace {

struct Style {
    const char* fill;
    const char* stroke;
    int radius;
};

Style style_for(Family f) {
    switch (f) {
        case Family::L: return {"#4d4d4d", "none", 4};
        case Family::Lp: return {"#ffffff", "#4d4d4d", 4};
        case Family::R: return {"#8c8c8c", "none", 4};
        case Family::A: return {"#1f5fd6", "#0b2a66", 6};
        case Family::Ap: return {"#17a2b8", "#0b4f5a", 6};
        case Family::B: return {"#7b3fc4", "#3a1766", 6};
    }
    return {"#000000", "none", 4};
}

std::string escape(const std::string& s) {
    std::string out;
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

class Frame {
public:
    Frame(const PointSet& points, const SvgOptions& o) : o_(o) {
        for (const auto& p : points) {
            xmin_ = std::min(xmin_, p.x);
            xmax_ = std::max(xmax_, p.x);
            ymin_ = std::min(ymin_, p.y);
            ymax_ = std::max(ymax_, p.y);
        }
        if (points.empty()) xmin_ = xmax_ = ymin_ = ymax_ = 0;
    }

    long long px(Coord x) const { return o_.margin + scale(x - xmin_, xmax_ - xmin_, o_.width - 2 * o_.margin); }
    long long py(Coord y) const {
        return o_.height - o_.margin - scale(y - ymin_, ymax_ - ymin_, o_.height - 2 * o_.margin);
    }

private:
    static long long scale(Coord offset, Coord span, long long pixels) {
        if (span <= 0) return pixels / 2;
        return static_cast<long long>(offset) * pixels / static_cast<long long>(span);
    }

    const SvgOptions& o_;
    Coord xmin_ = std::numeric_limits<Coord>::max();
    Coord xmax_ = std::numeric_limits<Coord>::min();
    Coord ymin_ = std::numeric_limits<Coord>::max();
    Coord ymax_ = std::numeric_limits<Coord>::min();
};

std::string label_of(const WeightedPoint& p) { return p.label ? to_string(*p.label) : std::string("?"); }

}  // namespace

std::string render_svg(const PointSet& points, const std::optional<Chain>& chain, const SvgOptions& o) {
    PointSet sorted = points;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& p, const auto& q) { return p.x < q.x; });
    const Frame frame(sorted, o);

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << o.width << "\" height=\"" << o.height
        << "\" viewBox=\"0 0 " << o.width << ' ' << o.height << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << o.width << "\" height=\"" << o.height << "\" fill=\"#ffffff\"/>\n";
    if (!o.title.empty()) {
        svg << "<text x=\"" << o.margin << "\" y=\"" << o.margin / 2 << "\" font-family=\"sans-serif\" font-size=\"14\">"
            << escape(o.title) << "</text>\n";
    }

    if (chain && !chain->points.empty()) {
        std::string labels;
        svg << "<polyline id=\"chain\" class=\"chain\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" points=\"";
        for (std::size_t k = 0; k < chain->points.size(); ++k) {
            const auto& p = chain->points[k];
            if (k) {
                svg << ' ';
                labels += ' ';
            }
            svg << frame.px(p.x) << ',' << frame.py(p.y);
            labels += label_of(p);
        }
        svg << "\" data-start=\"" << escape(label_of(chain->points.front())) << "\" data-end=\""
            << escape(label_of(chain->points.back())) << "\" data-weight=\"" << chain->weight << "\" data-labels=\""
            << escape(labels) << "\"/>\n";
    }

    svg << "<g id=\"points\">\n";
    for (const auto& p : sorted) {
        const Family fam = p.label ? p.label->family : Family::L;
        const Style st = style_for(fam);
        const bool special = p.label && p.label->is_special();
        svg << "<circle class=\"pt fam-" << family_name(fam) << (special ? " special" : "") << "\" cx=\""
            << frame.px(p.x) << "\" cy=\"" << frame.py(p.y) << "\" r=\"" << st.radius << "\" fill=\"" << st.fill
            << "\" stroke=\"" << st.stroke << "\" data-label=\"" << escape(label_of(p)) << "\" data-x=\"" << p.x
            << "\" data-y=\"" << p.y << "\" data-w=\"" << p.w << "\"/>\n";
    }
    svg << "</g>\n";

    if (o.weight_labels) {
        svg << "<g id=\"weights\" font-family=\"sans-serif\" font-size=\"9\" fill=\"#333333\">\n";
        for (const auto& p : sorted) {
            svg << "<text x=\"" << frame.px(p.x) + 5 << "\" y=\"" << frame.py(p.y) - 5 << "\">" << p.w << "</text>\n";
        }
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace lislab::cli
