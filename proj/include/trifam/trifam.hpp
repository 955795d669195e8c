#pragma once

#include "trifam/error.hpp"
#include "trifam/rational.hpp"
#include "trifam/geometry.hpp"
#include "trifam/pointset.hpp"
#include "trifam/family.hpp"
#include "trifam/io.hpp"
#include "trifam/strips.hpp"
#include "trifam/replacement.hpp"
#include "trifam/peeling.hpp"
#include "trifam/clique.hpp"
#include "trifam/montecarlo.hpp"
