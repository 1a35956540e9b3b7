#pragma once

#include "goldenbeta/golden_scalar.hpp"
#include "goldenbeta/words.hpp"
#include "goldenbeta/partition.hpp"
#include "goldenbeta/dynamics.hpp"
#include "goldenbeta/polynomial.hpp"
#include "goldenbeta/roots.hpp"
#include "goldenbeta/density.hpp"
#include "goldenbeta/experiments.hpp"
