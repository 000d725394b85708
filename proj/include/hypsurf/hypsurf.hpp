#pragma once

// Everything except io.hpp, which additionally needs nlohmann/json.

#include "hypsurf/boundary.hpp"
#include "hypsurf/error.hpp"
#include "hypsurf/fuchsian.hpp"
#include "hypsurf/pants.hpp"
#include "hypsurf/poincare.hpp"
#include "hypsurf/surface.hpp"
#include "hypsurf/word.hpp"
