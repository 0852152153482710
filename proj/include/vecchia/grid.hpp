/* Ordered sampling-location sets on the unit interval / unit square. */
#pragma once

#include <array>
#include <vector>

namespace vecchia {

// Ordered locations in d = 1 or 2.  The stored order is the conditioning
// order used by every downstream module.  Duplicate points are rejected at
// construction (they make covariance matrices singular).
class LocationSet {
  public:
    // n equispaced points {i/(n-1) : 0 <= i < n} on [0,1], natural order.
    static LocationSet grid_1d(int n);
    // The closed grid {i/n : 0 <= i <= n} (n+1 points, spacing 1/n) used by
    // the assumption study.
    static LocationSet grid_1d_closed(int n);
    // side^2 points {(i,j)/(side-1)} on [0,1]^2, ordered by second
    // coordinate, ties broken by first coordinate.
    static LocationSet grid_2d(int side);
    // Arbitrary points in the stated dimension, kept in the given order.
    static LocationSet from_points(std::vector<std::array<double, 2>> pts, int dim);

    int size() const { return static_cast<int>(pts_.size()); }
    int dim() const { return dim_; }
    double coord(int i, int d) const { return pts_[i][d]; }
    double distance(int i, int j) const;
    const std::vector<std::array<double, 2>>& points() const { return pts_; }

  private:
    LocationSet(std::vector<std::array<double, 2>> pts, int dim);
    std::vector<std::array<double, 2>> pts_;
    int dim_;
};

}  // namespace vecchia
