#pragma once

#include "frechet/curve.hpp"

namespace frechet {

// True iff the Fréchet distance of x and y is at most eps, by monotone
// free-space propagation over the n x m grid of unit cells with the fixed
// endpoint matching (0,0) -> (n,m).
bool decide_classic(const Curve& x, const Curve& y, double eps);

// Smallest classic critical value accepted by decide_classic.
double compute_classic(const Curve& x, const Curve& y);

}  // namespace frechet
