#pragma once

#include "collatzdb/arith.hpp"
#include "collatzdb/conjugacy.hpp"
#include "collatzdb/cycles.hpp"
#include "collatzdb/digit_word.hpp"
#include "collatzdb/errors.hpp"
#include "collatzdb/graphs.hpp"
#include "collatzdb/limits.hpp"
#include "collatzdb/maps.hpp"
#include "collatzdb/spectral.hpp"
#include "collatzdb/words.hpp"
