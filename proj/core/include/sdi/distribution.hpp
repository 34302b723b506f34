#pragma once

#include "sdi/rng.hpp"

namespace sdi {

// Scalar input distribution. Only the uniform interval is shipped; all raw
// moments and the partial expectations needed by the closed-form ell's are
// available exactly. A degenerate interval (lo == hi) is the point mass.
class InputDistribution {
public:
    static InputDistribution uniform(double lo, double hi);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool degenerate() const { return lo_ == hi_; }

    double mean() const;

    // E[v^j], j >= 0.
    double raw_moment(int j) const;

    // E[max(v, 0)] and E[max(-v, 0)].
    double positive_part_mean() const;
    double negative_part_mean() const;

    double abs_mean() const;

    // E[max(a*v, b*v)] in closed form.
    double max_affine_pair_mean(double a, double b) const;

    double sample(RngStream& rng) const;

private:
    InputDistribution(double lo, double hi) : lo_(lo), hi_(hi) {}

    double lo_ = 0.0;
    double hi_ = 0.0;
};

} // namespace sdi
