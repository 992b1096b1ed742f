#pragma once

#include "analysis.hpp"
#include "bitword.hpp"
#include "codebook.hpp"
#include "decoder.hpp"
#include "montecarlo.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "verify.hpp"
