#pragma once

#include "ellip/bounds.hpp"
#include "ellip/combinatorics.hpp"
#include "ellip/core.hpp"
#include "ellip/grid.hpp"
#include "ellip/quadrature.hpp"
#include "ellip/reference.hpp"
#include "ellip/registry.hpp"
#include "ellip/report_io.hpp"
#include "ellip/sweep.hpp"
