#pragma once

#include <angsum/latsum/checks.hpp>
#include <angsum/latsum/direct.hpp>
#include <angsum/latsum/identities.hpp>
#include <angsum/latsum/kober.hpp>
#include <angsum/latsum/rays.hpp>
#include <angsum/latsum/types.hpp>
