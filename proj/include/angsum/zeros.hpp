#pragma once

#include <angsum/zeros/family.hpp>
#include <angsum/zeros/find.hpp>
#include <angsum/zeros/stats.hpp>
