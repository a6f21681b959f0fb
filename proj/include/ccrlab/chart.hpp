#pragma once

// Coordinate chart on the quotient group R^d / N for a rank-r lattice N:
// x = F y + B u with B the lattice basis and F a rational orthogonal basis
// of span(B)^perp. Coordinates y live in R^{d-r} (units of the F columns,
// per-axis physical scale |F_a|), u lives on the torus [0,1)^r. Keeping F
// rational (orthogonal but not normalized) makes every grid point an exact
// rational vector, so membership decisions on grids stay exact; the Haar
// density in (y,u) coordinates is the exact constant |det [F B]|.

#include <Eigen/Dense>

#include "ccrlab/cone.hpp"
#include "ccrlab/lattice.hpp"

namespace ccrlab {

class QuotientChart {
 public:
  /// functionalDirection must be orthogonal to the lattice (exact).
  QuotientChart(const Lattice& lattice, const RatVec& functionalDirection);

  int dim() const { return lattice_.dim(); }
  int torusRank() const { return lattice_.rank(); }
  int freeRank() const { return dim() - torusRank(); }

  const Lattice& lattice() const { return lattice_; }
  const UnitFunctional& functional() const { return functional_; }

  /// Rational orthogonal complement frame (d x (d-r)).
  const RatMat& complement() const { return complement_; }
  /// Column-normalized complement frame (the orthonormal chart axes).
  const Eigen::MatrixXd& complementUnit() const { return complementUnit_; }
  /// Physical length of one coordinate unit along each free axis.
  const Eigen::VectorXd& axisScale() const { return axisScale_; }
  /// Haar density |det [F B]| of the (y,u) coordinates.
  const Rat& jacobian() const { return jacobian_; }

  /// Exact chart point F y + B u.
  RatVec point(const RatVec& y, const RatVec& u) const;

  struct Coords {
    RatVec y;  // free coordinates
    RatVec u;  // torus coordinates in [0,1)^r
  };

  /// Exact coordinates; the dropped integer part witnesses x - point(y,u) in N.
  Coords coords(const RatVec& x) const;

  /// Floating-point convenience overload.
  std::pair<Eigen::VectorXd, Eigen::VectorXd> coords(const Eigen::VectorXd& x) const;

 private:
  Lattice lattice_;
  UnitFunctional functional_;
  RatMat complement_;
  Eigen::MatrixXd complementUnit_;
  Eigen::VectorXd axisScale_;
  RatMat frame_;     // [F B]
  RatMat frameInv_;  // exact inverse
  Rat jacobian_;
};

/// Spec-facing wrapper: (y, u) with u reduced mod Z^r.
inline QuotientChart::Coords quotient_coords(const QuotientChart& chart, const RatVec& x) {
  return chart.coords(x);
}

}  // namespace ccrlab
