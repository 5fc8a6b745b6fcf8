#ifndef DOPE_DOPE_HPP
#define DOPE_DOPE_HPP

#include "dope/census.hpp"
#include "dope/counting.hpp"
#include "dope/dope_eval.hpp"
#include "dope/error.hpp"
#include "dope/exact_linalg.hpp"
#include "dope/patterns.hpp"
#include "dope/polynomial.hpp"
#include "dope/rational.hpp"
#include "dope/synthesis.hpp"
#include "dope/types.hpp"

#endif  // DOPE_DOPE_HPP
