#pragma once

// Umbrella header for the whole library.

#include "semforest/combinatorics.hpp"
#include "semforest/elementary.hpp"
#include "semforest/forest.hpp"
#include "semforest/gap_semigroup.hpp"
#include "semforest/irreducible.hpp"
#include "semforest/kunz_vector.hpp"
#include "semforest/oracle.hpp"
