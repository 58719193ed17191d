#pragma once

#include "ptp/contour.hpp"
#include "ptp/convergence.hpp"
#include "ptp/discretize.hpp"
#include "ptp/eig.hpp"
#include "ptp/errors.hpp"
#include "ptp/exact.hpp"
#include "ptp/json_io.hpp"
#include "ptp/potential.hpp"
#include "ptp/shooting.hpp"
#include "ptp/spectrum.hpp"
#include "ptp/svg.hpp"
#include "ptp/transforms.hpp"
#include "ptp/verify.hpp"
