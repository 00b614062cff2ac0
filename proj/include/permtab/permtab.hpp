#pragma once

// Umbrella header: permutation tableaux, their dot form, the inversion
// statistic, the bijection to permutations, dashed pattern counting,
// exhaustive enumeration, and the self-check suites.

#include "ferrers.hpp"      // Ferrers shapes and border labels
#include "tableau.hpp"      // 0/1 fillings, validation, cell classes
#include "alternative.hpp"  // black/white dot form and reconstruction
#include "paths.hpp"        // alternating paths, path order, inversions
#include "bijection.hpp"    // map to permutations
#include "patterns.hpp"     // dashed patterns and occurrence counting
#include "enumerate.hpp"    // shape/tableau generators, distributions
#include "lbell.hpp"        // inversion-free tableaux and Bell numbers
#include "io.hpp"           // text formats
#include "verify.hpp"       // check suites and bundled examples
