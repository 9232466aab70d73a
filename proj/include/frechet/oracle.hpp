#pragma once

#include "frechet/curve.hpp"

namespace frechet {

// Exhaustive reference implementations of the outlier distances, built only
// on curve enumeration and the classic decision/computation. Desk-scale by
// design; inputs beyond the guard raise GuardError.
bool brute_feasible(const Curve& x, const Curve& y, const OutlierSpec& spec);

bool brute_decide(const Curve& x, const Curve& y, const OutlierSpec& spec, double eps);

double brute_compute(const Curve& x, const Curve& y, const OutlierSpec& spec);

}  // namespace frechet
