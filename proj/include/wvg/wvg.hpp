#pragma once

#include "wvg/types.hpp"
#include "wvg/game.hpp"
#include "wvg/counting.hpp"
#include "wvg/power_indices.hpp"
#include "wvg/manipulation.hpp"
#include "wvg/instance_gen.hpp"
#include "wvg/io.hpp"
