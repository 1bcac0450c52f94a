#include "sturmlab/chart.hpp"

#include <sstream>

namespace sturmlab {

std::string ascii_chart(const Pattern& pattern) {
    const std::size_t n = pattern.ranks.size();
    if (n == 0) throw EmptyInput();
    std::ostringstream os;
    for (std::size_t row = n; row-- > 0;) {  // highest rank first
        for (std::size_t col = 0; col < n; ++col)
            os << (pattern.ranks[col] == row + 1 ? '*' : '.');
        os << '\n';
    }
    return os.str();
}

namespace {

std::string svg_points(const std::vector<double>& ys, const ChartGeometry& g) {
    const std::size_t n = ys.size();
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << g.width
       << "\" height=\"" << g.height << "\" viewBox=\"0 0 " << g.width << ' ' << g.height
       << "\">\n";
    const double x0 = (double)g.margin, x1 = (double)(g.width - g.margin);
    const double y0 = (double)(g.height - g.margin), y1 = (double)g.margin;
    if (g.axes) {
        os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0
           << "\" stroke=\"black\"/>\n";
        os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
           << "\" stroke=\"black\"/>\n";
    }
    for (std::size_t i = 0; i < n; ++i) {
        double fx = n > 1 ? (double)i / (double)(n - 1) : 0.5;
        double x = x0 + fx * (x1 - x0);
        double y = y0 + ys[i] * (y1 - y0);
        char buf[96];
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%zu\"/>\n", x, y,
                      g.point_radius);
        os << buf;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string svg_chart(const Representative& rep, const ChartGeometry& geom, bool by_values) {
    if (rep.size() == 0) throw EmptyInput();
    std::vector<double> ys(rep.size());
    if (by_values) {
        for (std::size_t i = 0; i < rep.size(); ++i) ys[i] = rep[i].to_double();
    } else {
        const auto& r = rep.global_ranks();
        for (std::size_t i = 0; i < rep.size(); ++i)
            ys[i] = rep.size() > 1 ? (double)r[i] / (double)(rep.size() - 1) : 0.5;
    }
    return svg_points(ys, geom);
}

std::string svg_chart(const Pattern& pattern, const ChartGeometry& geom) {
    const std::size_t n = pattern.ranks.size();
    if (n == 0) throw EmptyInput();
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i)
        ys[i] = n > 1 ? (double)(pattern.ranks[i] - 1) / (double)(n - 1) : 0.5;
    return svg_points(ys, geom);
}

}  // namespace sturmlab
