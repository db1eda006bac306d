#ifndef CAMQST_GRID_HPP
#define CAMQST_GRID_HPP

#include <stdexcept>

namespace camqst {

/// Square pixel grid over [-extent, extent]^2, pixels indexed row-major by
/// k = row * side + col, evaluated at cell centers.
struct PixelGrid {
  int side;
  double extent;

  PixelGrid(int side_, double extent_) : side(side_), extent(extent_) {
    if (side < 2) throw std::invalid_argument("PixelGrid: side must be >= 2");
    if (!(extent > 0.0)) throw std::invalid_argument("PixelGrid: extent must be > 0");
  }

  int n_pixels() const { return side * side; }
  double pixel_size() const { return 2.0 * extent / side; }
  double pixel_area() const { return pixel_size() * pixel_size(); }

  int row(int k) const { return k / side; }
  int col(int k) const { return k % side; }
  double x(int k) const { return -extent + (col(k) + 0.5) * pixel_size(); }
  double y(int k) const { return -extent + (row(k) + 0.5) * pixel_size(); }
};

}  // namespace camqst

#endif
