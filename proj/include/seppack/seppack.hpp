#pragma once

// Everything except the I/O headers under seppack/io/, which pull in extra dependencies.

#include "seppack/errors.hpp"
#include "seppack/rational.hpp"
#include "seppack/linalg.hpp"
#include "seppack/report.hpp"
#include "seppack/spherical_codes.hpp"
#include "seppack/certificates.hpp"
#include "seppack/ell1.hpp"
#include "seppack/polyomino.hpp"
#include "seppack/planar.hpp"
