#pragma once

// Umbrella header: the whole library.

#include "cartprod/cli.hpp"
#include "cartprod/errors.hpp"
#include "cartprod/gauss_int.hpp"
#include "cartprod/graph.hpp"
#include "cartprod/identities.hpp"
#include "cartprod/io.hpp"
#include "cartprod/matrix.hpp"
#include "cartprod/spectra.hpp"
#include "cartprod/verify.hpp"
