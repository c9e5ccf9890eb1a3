#pragma once

#include "tug/axioms.hpp"
#include "tug/coalition.hpp"
#include "tug/errors.hpp"
#include "tug/game.hpp"
#include "tug/io.hpp"
#include "tug/numeric.hpp"
#include "tug/rng.hpp"
#include "tug/sampling.hpp"
#include "tug/solution.hpp"
#include "tug/theorems.hpp"
#include "tug/transforms.hpp"
#include "tug/values.hpp"
