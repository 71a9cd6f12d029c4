#ifndef SYMCOVER_SYMCOVER_HPP
#define SYMCOVER_SYMCOVER_HPP

// Umbrella header.

#include "assignment.hpp"
#include "bounds.hpp"
#include "canonize.hpp"
#include "coverage.hpp"
#include "hilbert.hpp"
#include "io.hpp"
#include "jacobi.hpp"
#include "metrics.hpp"
#include "point_cloud.hpp"
#include "synth.hpp"
#include "verify.hpp"

#endif // SYMCOVER_SYMCOVER_HPP
