#pragma once

#include <angsum/specfun/chebyshev.hpp>
#include <angsum/specfun/gamma.hpp>
#include <angsum/specfun/macdonald.hpp>
#include <angsum/specfun/zeta.hpp>
