#pragma once

// Umbrella header for the segmon library.

#include "segmon/checks.hpp"
#include "segmon/element.hpp"
#include "segmon/errors.hpp"
#include "segmon/expr.hpp"
#include "segmon/rational.hpp"
#include "segmon/rook.hpp"
#include "segmon/sampling.hpp"
#include "segmon/structure.hpp"
