#pragma once

#include <cmath>

#include "epnt/rigor.hpp"

// relative distance of an enclosure's midpoint from a reference value
inline double rel_err(const epnt::Interval& v, double ref) { return std::fabs(v.mid() - ref) / std::fabs(ref); }
inline double rel_err(double v, double ref) { return std::fabs(v - ref) / std::fabs(ref); }
