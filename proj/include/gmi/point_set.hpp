#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gmi {

struct WeightedPoint {
    std::array<double, 3> coords{0.0, 0.0, 0.0};
    double weight = 0.0;
};

/// Discrete weighted measure: the carrier of shapes. Points are 2D or 3D
/// with nonnegative weights.
struct WeightedPointSet {
    int dim = 2;
    std::vector<WeightedPoint> points;

    WeightedPointSet() = default;
    explicit WeightedPointSet(int d) : dim(d) {}

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }

    void add(double x, double y, double w) {
        points.push_back({{x, y, 0.0}, w});
    }
    void add(double x, double y, double z, double w) {
        points.push_back({{x, y, z}, w});
    }

    double total_weight() const;
};

/// Parse the point-set text format:
///   DIM <2|3>
///   x y w        (or "x y z w" in 3D; '#' starts a comment)
WeightedPointSet parse_point_set(std::istream& in);
WeightedPointSet load_point_set(const std::string& path);
void write_point_set(std::ostream& out, const WeightedPointSet& ps);

/// Grayscale raster held as rows of intensities.
struct GrayImage {
    int width = 0, height = 0, maxval = 0;
    std::vector<std::uint32_t> pixels;  // row-major

    std::uint32_t at(int row, int col) const { return pixels[std::size_t(row) * width + col]; }
};

/// Parse binary or ASCII PGM (P5/P2, maxval <= 65535). Malformed input raises
/// std::runtime_error naming the byte offset.
GrayImage parse_pgm(std::istream& in);
GrayImage load_pgm(const std::string& path);

/// One point per nonzero pixel, weight = intensity, pixel centers at
/// half-integer offsets, y axis pointing up: row r -> y = H - r - 0.5.
WeightedPointSet image_to_point_set(const GrayImage& img);

/// Dispatch on file content: PGM magic or point-set text.
WeightedPointSet load_shape(const std::string& path);

}  // namespace gmi
