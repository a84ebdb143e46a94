#pragma once

// Exact-arithmetic classification of alpha-stable coherent systems on the
// projective line: necessary windows, critical values with flip numbers,
// existence verdicts, window sweeps, and a finite-field sampling oracle for
// the section-subspace bound.

#include "rational.hpp"    // IWYU pragma: export
#include "systems.hpp"     // IWYU pragma: export
#include "critical.hpp"    // IWYU pragma: export
#include "segre.hpp"       // IWYU pragma: export
#include "classifier.hpp"  // IWYU pragma: export
#include "search.hpp"      // IWYU pragma: export
#include "serialize.hpp"   // IWYU pragma: export
