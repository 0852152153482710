/* Location-set constructors and duplicate screening. */
#include "vecchia/grid.hpp"

#include <algorithm>
#include <cmath>

#include "vecchia/common.hpp"

namespace vecchia {

LocationSet::LocationSet(std::vector<std::array<double, 2>> pts, int dim)
    : pts_(std::move(pts)), dim_(dim) {
    if (dim_ != 1 && dim_ != 2) throw argument_error("LocationSet: dim must be 1 or 2");
    if (pts_.empty()) throw argument_error("LocationSet: needs at least one point");
    for (const auto& p : pts_) {
        for (int d = 0; d < dim_; ++d) {
            if (!std::isfinite(p[d]))
                throw argument_error("LocationSet: non-finite coordinate");
        }
    }
    // duplicate screen: sort a copy lexicographically, compare neighbors
    std::vector<std::array<double, 2>> sorted = pts_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1])
            throw argument_error("LocationSet: duplicate points are not allowed");
    }
}

double LocationSet::distance(int i, int j) const {
    const double dx = pts_[i][0] - pts_[j][0];
    if (dim_ == 1) return std::abs(dx);
    const double dy = pts_[i][1] - pts_[j][1];
    return std::sqrt(dx * dx + dy * dy);
}

LocationSet LocationSet::grid_1d(int n) {
    if (n < 2) throw argument_error("grid_1d: need n >= 2");
    std::vector<std::array<double, 2>> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = {static_cast<double>(i) / (n - 1), 0.0};
    return LocationSet(std::move(pts), 1);
}

LocationSet LocationSet::grid_1d_closed(int n) {
    if (n < 1) throw argument_error("grid_1d_closed: need n >= 1");
    std::vector<std::array<double, 2>> pts(n + 1);
    for (int i = 0; i <= n; ++i) pts[i] = {static_cast<double>(i) / n, 0.0};
    return LocationSet(std::move(pts), 1);
}

LocationSet LocationSet::grid_2d(int side) {
    if (side < 2) throw argument_error("grid_2d: need side >= 2");
    std::vector<std::array<double, 2>> pts;
    pts.reserve(static_cast<std::size_t>(side) * side);
    // second coordinate varies slowest: ordering by y, then x
    for (int j = 0; j < side; ++j) {
        for (int i = 0; i < side; ++i) {
            pts.push_back({static_cast<double>(i) / (side - 1),
                           static_cast<double>(j) / (side - 1)});
        }
    }
    return LocationSet(std::move(pts), 2);
}

LocationSet LocationSet::from_points(std::vector<std::array<double, 2>> pts, int dim) {
    if (dim == 1) {
        for (auto& p : pts) p[1] = 0.0;
    }
    return LocationSet(std::move(pts), dim);
}

}  // namespace vecchia
