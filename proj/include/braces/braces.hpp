// Umbrella header for the braces library.

#pragma once

#include "braces/axioms.hpp"
#include "braces/cayley.hpp"
#include "braces/check.hpp"
#include "braces/core.hpp"
#include "braces/epimorphism.hpp"
#include "braces/free_d2.hpp"
#include "braces/free_d3.hpp"
#include "braces/integer.hpp"
#include "braces/io.hpp"
#include "braces/run.hpp"
#include "braces/series.hpp"
#include "braces/ybe.hpp"
