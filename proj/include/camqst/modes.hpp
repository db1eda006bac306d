#ifndef CAMQST_MODES_HPP
#define CAMQST_MODES_HPP

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "camqst/grid.hpp"

namespace camqst {

/// Laguerre-Gauss mode indices and beam geometry. l is the azimuthal index
/// (sign = handedness of the phase vortex), p the radial index.
struct LgModeSpec {
  int l = 0;
  int p = 0;
  double w0 = 1.0;        // beam waist
  double z = 0.0;         // propagation distance
  double rayleigh = 1.0;  // Rayleigh range

  double waist_at_z() const;
  void validate() const;
  std::string label() const;
};

/// Spatial mode family sampled on a pixel grid. Each column of `samples` is
/// one mode, renormalized so its discrete squared norm times the pixel area
/// is exactly 1.
struct ModeBasis {
  PixelGrid grid;
  std::vector<LgModeSpec> specs;     // empty entries allowed for file-loaded bases
  std::vector<std::string> labels;   // one per mode
  Eigen::MatrixXcd samples;          // n_pixels x dim

  int dim() const { return static_cast<int>(samples.cols()); }

  /// Discrete Gram matrix G_ij = sum_k conj(f_i(r_k)) f_j(r_k) * pixel_area.
  Eigen::MatrixXcd gram() const;

  /// ||G - I||_F; also the deviation of the pixel-projector sum from identity.
  double completeness_error() const;
};

/// Amplitude vector of the mode superposition measured at one pixel.
struct PixelState {
  int pixel;
  Eigen::VectorXcd amplitudes;  // entry i = conj(f_i(r_k))
};

/// Sampled LG field at every pixel center, renormalized on the grid.
/// Throws when the grid resolves none of the mode's support.
Eigen::VectorXcd lg_mode_eval(const LgModeSpec& spec, const PixelGrid& grid);

/// (l, p) pairs with 2p + |l| = order, enumerated by increasing |l| with
/// positive l before negative. There are exactly order + 1 such pairs.
std::vector<std::pair<int, int>> constant_order_pairs(int order, int count);

ModeBasis build_basis(std::vector<LgModeSpec> specs, const PixelGrid& grid,
                      double gram_tolerance = 0.1);

ModeBasis build_constant_order_basis(int order, int count, double w0, double z,
                                     const PixelGrid& grid);

/// Extends a basis to `total` modes with p = 0 modes on unused azimuthal
/// indices (enumerated by increasing |l|, positive first). Used to host
/// ancilla modes behind a coupler.
ModeBasis extend_with_oam_ancillas(const ModeBasis& physical, int total);

/// Pure-OAM basis (p = 0) over the given azimuthal indices.
ModeBasis build_oam_basis(const std::vector<int>& ls, double w0, double z,
                          const PixelGrid& grid);

std::vector<PixelState> pixel_states(const ModeBasis& basis);

/// Batched pixel states: row k = conj(samples row k).
Eigen::MatrixXcd pixel_state_matrix(const ModeBasis& basis);

}  // namespace camqst

#endif
