#pragma once

#include "ivp/algint.hpp"
#include "ivp/candidate.hpp"
#include "ivp/density.hpp"
#include "ivp/errors.hpp"
#include "ivp/format.hpp"
#include "ivp/hnf.hpp"
#include "ivp/matrix.hpp"
#include "ivp/matrix_lab.hpp"
#include "ivp/membership.hpp"
#include "ivp/modpoly.hpp"
#include "ivp/numeric.hpp"
#include "ivp/parse.hpp"
#include "ivp/poly.hpp"
#include "ivp/rng.hpp"
#include "ivp/verdict.hpp"
