#pragma once

// Umbrella header: difference-graph labeling toolkit.

#include "canonical.hpp"   // IWYU pragma: export
#include "checked.hpp"     // IWYU pragma: export
#include "errors.hpp"      // IWYU pragma: export
#include "families.hpp"    // IWYU pragma: export
#include "graph.hpp"       // IWYU pragma: export
#include "io.hpp"          // IWYU pragma: export
#include "search.hpp"      // IWYU pragma: export
#include "verify.hpp"      // IWYU pragma: export
