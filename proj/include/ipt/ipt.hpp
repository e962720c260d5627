#pragma once

#include "ipt/error.hpp"
#include "ipt/exact.hpp"
#include "ipt/point_set.hpp"
#include "ipt/lattice.hpp"
#include "ipt/precision.hpp"
#include "ipt/polytope.hpp"
#include "ipt/transform.hpp"
#include "ipt/finite_fourier.hpp"
#include "ipt/brion.hpp"
#include "ipt/corpus.hpp"
