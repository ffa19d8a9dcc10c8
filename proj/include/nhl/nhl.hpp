#pragma once

#include "nhl/algebra.hpp"
#include "nhl/cohomology.hpp"
#include "nhl/combinatorics.hpp"
#include "nhl/deformation.hpp"
#include "nhl/derivation.hpp"
#include "nhl/errors.hpp"
#include "nhl/extension.hpp"
#include "nhl/fixtures.hpp"
#include "nhl/matrix.hpp"
#include "nhl/report.hpp"
#include "nhl/representation.hpp"
#include "nhl/scalar.hpp"
#include "nhl/wedge.hpp"
