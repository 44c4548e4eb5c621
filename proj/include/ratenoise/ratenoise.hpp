#pragma once

#include "ratenoise/filters.hpp"
#include "ratenoise/harness.hpp"
#include "ratenoise/impulse.hpp"
#include "ratenoise/io.hpp"
#include "ratenoise/noise.hpp"
#include "ratenoise/quantise.hpp"
#include "ratenoise/random.hpp"
#include "ratenoise/signal.hpp"
#include "ratenoise/spectral.hpp"
#include "ratenoise/units.hpp"
