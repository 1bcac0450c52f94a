#pragma once

#include <string>

#include "sturmlab/permutation.hpp"

namespace sturmlab {

struct ChartGeometry {
    std::size_t width = 640;
    std::size_t height = 400;
    std::size_t margin = 20;
    std::size_t point_radius = 3;
    bool axes = true;
};

/// Dot-per-column text chart; higher elements are higher on the image.
std::string ascii_chart(const Pattern& pattern);

/// Deterministic SVG 1.1. Vertical placement by rank (order-faithful) unless
/// by_values, which uses the numeric values instead.
std::string svg_chart(const Representative& rep, const ChartGeometry& geom = {},
                      bool by_values = false);
std::string svg_chart(const Pattern& pattern, const ChartGeometry& geom = {});

}  // namespace sturmlab
