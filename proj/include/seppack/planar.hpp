#pragma once

#include "seppack/planar/polygon.hpp"
#include "seppack/planar/packing.hpp"
#include "seppack/planar/separability.hpp"
#include "seppack/planar/parallelogram.hpp"
#include "seppack/planar/generate.hpp"
#include "seppack/planar/measure.hpp"
#include "seppack/planar/boundary.hpp"
