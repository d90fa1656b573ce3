#pragma once

#include <angsum/structure/functions.hpp>
#include <angsum/structure/theorem5.hpp>
