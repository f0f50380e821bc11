// SPDX-License-Identifier: Apache-2.0
//
// Umbrella header for the whole library.
#pragma once

#include "polya/analysis.hpp"
#include "polya/binomial.hpp"
#include "polya/enumerate.hpp"
#include "polya/errors.hpp"
#include "polya/montecarlo.hpp"
#include "polya/rng.hpp"
#include "polya/series.hpp"
#include "polya/sign_pair.hpp"
#include "polya/walk.hpp"
