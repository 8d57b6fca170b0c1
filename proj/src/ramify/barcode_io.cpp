#include "ramify/barcode_io.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ramify {

std::string barcode_svg(const std::vector<BarView>& bars, const std::vector<double>& critical_values) {
    double max_scale = 1;
    int max_dim = 0;
    for (double v : critical_values) max_scale = std::max(max_scale, v);
    for (const auto& b : bars) {
        max_dim = std::max(max_dim, b.dim);
        if (!std::isinf(b.death)) max_scale = std::max(max_scale, b.death);
    }
    max_scale *= 1.05;

    // group by dimension, keep barcode order inside each band
    std::map<int, std::vector<BarView>> by_dim;
    for (const auto& b : bars) by_dim[b.dim].push_back(b);

    const double margin_left = 60, margin_top = 30, plot_w = 560, row_h = 14, band_gap = 26;
    std::size_t rows = bars.size() + by_dim.size();
    const double height = margin_top * 2 + static_cast<double>(rows) * row_h +
                          static_cast<double>(by_dim.size()) * band_gap + 30;
    auto x_of = [&](double scale) { return margin_left + scale / max_scale * plot_w; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(margin_left + plot_w + 60)
        << "\" height=\"" << format_double(height) << "\">\n";
    svg << "  <g font-family=\"sans-serif\" font-size=\"11\">\n";

    double y = margin_top;
    const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2"};
    for (const auto& [dim, band] : by_dim) {
        svg << "  <text x=\"8\" y=\"" << format_double(y + 10) << "\" font-weight=\"bold\">H" << dim
            << "</text>\n";
        y += row_h;
        const char* color = palette[static_cast<std::size_t>(dim) % 6];
        for (const auto& b : band) {
            const double x0 = x_of(b.birth);
            const double x1 = std::isinf(b.death) ? margin_left + plot_w : x_of(b.death);
            svg << "  <line x1=\"" << format_double(x0) << "\" y1=\"" << format_double(y) << "\" x2=\""
                << format_double(x1) << "\" y2=\"" << format_double(y) << "\" stroke=\"" << color
                << "\" stroke-width=\"4\"";
            if (std::isinf(b.death)) svg << " stroke-dasharray=\"6,3\"";
            svg << "/>\n";
            if (std::isinf(b.death))
                svg << "  <text x=\"" << format_double(margin_left + plot_w + 6) << "\" y=\""
                    << format_double(y + 4) << "\">&#8734;</text>\n";
            y += row_h;
        }
        y += band_gap;
    }

    // scale axis with ticks at critical values
    const double axis_y = y;
    svg << "  <line x1=\"" << format_double(margin_left) << "\" y1=\"" << format_double(axis_y) << "\" x2=\""
        << format_double(margin_left + plot_w) << "\" y2=\"" << format_double(axis_y) << "\" stroke=\"black\"/>\n";
    std::size_t tick_stride = critical_values.size() > 14 ? critical_values.size() / 14 + 1 : 1;
    for (std::size_t i = 0; i < critical_values.size(); i += tick_stride) {
        const double x = x_of(critical_values[i]);
        svg << "  <line x1=\"" << format_double(x) << "\" y1=\"" << format_double(axis_y - 4) << "\" x2=\""
            << format_double(x) << "\" y2=\"" << format_double(axis_y + 4) << "\" stroke=\"black\"/>\n";
        svg << "  <text x=\"" << format_double(x - 6) << "\" y=\"" << format_double(axis_y + 18) << "\">"
            << format_double(critical_values[i]) << "</text>\n";
    }
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

}  // namespace ramify
