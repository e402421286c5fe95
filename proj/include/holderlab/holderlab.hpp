#pragma once

// Umbrella header for the holder-lab library: exact classification of
// self-similar fractals up to Lipschitz and strict Holder equivalence,
// with certified witness maps verified by enumeration.

#include "holderlab/bigint.hpp"
#include "holderlab/classifier.hpp"
#include "holderlab/dimension.hpp"
#include "holderlab/errors.hpp"
#include "holderlab/exact_positive.hpp"
#include "holderlab/factor.hpp"
#include "holderlab/fractal_cube.hpp"
#include "holderlab/json_io.hpp"
#include "holderlab/manifest.hpp"
#include "holderlab/pbm.hpp"
#include "holderlab/rational.hpp"
#include "holderlab/scale_factor.hpp"
#include "holderlab/symbolic_space.hpp"
#include "holderlab/witness.hpp"
