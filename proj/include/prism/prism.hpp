#pragma once

/**
 * @file prism.hpp
 * @brief Umbrella header for the prism library.
 */

#include "prism/changemaker.hpp"
#include "prism/classify.hpp"
#include "prism/contfrac.hpp"
#include "prism/d4.hpp"
#include "prism/dedekind.hpp"
#include "prism/dinvariant.hpp"
#include "prism/enumerate.hpp"
#include "prism/floer.hpp"
#include "prism/gram.hpp"
#include "prism/lattice.hpp"
#include "prism/path_basis.hpp"
#include "prism/rational.hpp"
#include "prism/torsion.hpp"
#include "prism/vec.hpp"
