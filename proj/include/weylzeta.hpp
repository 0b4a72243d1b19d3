#pragma once

// Everything in one include.
#include "weylzeta/errors.hpp"
#include "weylzeta/rational.hpp"
#include "weylzeta/linalg.hpp"
#include "weylzeta/cyclotomic.hpp"
#include "weylzeta/polynomial.hpp"
#include "weylzeta/bernoulli.hpp"
#include "weylzeta/series.hpp"
#include "weylzeta/root_system.hpp"
#include "weylzeta/dynkin.hpp"
#include "weylzeta/weyl.hpp"
#include "weylzeta/poincare.hpp"
#include "weylzeta/numeric.hpp"
#include "weylzeta/lattice_zeta.hpp"
#include "weylzeta/bernoulli_gen.hpp"
#include "weylzeta/closed_forms.hpp"
#include "weylzeta/relations.hpp"
#include "weylzeta/json_io.hpp"
