// Level sets of the structure functions: sampled fields, marching squares,
// critical-line features, phase-line tracing with the cell census, and
// figure export.
#pragma once

#include <angsum/contour/critical.hpp>
#include <angsum/contour/field.hpp>
#include <angsum/contour/marching.hpp>
#include <angsum/contour/svg.hpp>
#include <angsum/contour/trace.hpp>
