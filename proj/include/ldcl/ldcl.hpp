#pragma once

#include "ldcl/bench.hpp"
#include "ldcl/container.hpp"
#include "ldcl/error.hpp"
#include "ldcl/giant_number.hpp"
#include "ldcl/logarithm.hpp"
#include "ldcl/matrix_codec.hpp"
#include "ldcl/metrics.hpp"
#include "ldcl/parallel.hpp"
#include "ldcl/sequence_codec.hpp"
