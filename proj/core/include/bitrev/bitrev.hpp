#pragma once

#include "bitrev/bits.hpp"
#include "bitrev/methods.hpp"
#include "bitrev/parallel.hpp"
#include "bitrev/permutations.hpp"
#include "bitrev/recursive.hpp"
#include "bitrev/schedule.hpp"
#include "bitrev/verify.hpp"
