#pragma once

#include "geodex/arithmetic.hpp"
#include "geodex/bigint.hpp"
#include "geodex/canonical.hpp"
#include "geodex/digraph.hpp"
#include "geodex/error.hpp"
#include "geodex/feasibility.hpp"
#include "geodex/outlier.hpp"
#include "geodex/permutation.hpp"
#include "geodex/polynomial.hpp"
#include "geodex/primality.hpp"
#include "geodex/search.hpp"
#include "geodex/walks.hpp"
