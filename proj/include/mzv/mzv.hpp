#pragma once

// Exact-plus-numeric toolkit for alternating multiple zeta values:
// shuffle-algebra words, identity families on double zetas, guaranteed-error
// evaluation of iterated integrals, and the weight-graded coaction.

#include "mzv/ball.hpp"
#include "mzv/cache.hpp"
#include "mzv/coaction.hpp"
#include "mzv/evaluator.hpp"
#include "mzv/expr.hpp"
#include "mzv/families.hpp"
#include "mzv/hoelder.hpp"
#include "mzv/identity.hpp"
#include "mzv/index.hpp"
#include "mzv/lincomb.hpp"
#include "mzv/monomial.hpp"
#include "mzv/rational.hpp"
#include "mzv/serialize.hpp"
#include "mzv/series.hpp"
#include "mzv/shuffle.hpp"
#include "mzv/word.hpp"
#include "mzv/zeta_single.hpp"
