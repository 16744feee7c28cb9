#pragma once

// Exact Dirac four-spinor eigenstates of an electron in a 2D hard-wall well:
// densities, current vortex topology, and current-field interaction energies.

#include "wavespin/checks.hpp"
#include "wavespin/constants.hpp"
#include "wavespin/density.hpp"
#include "wavespin/dirac.hpp"
#include "wavespin/errors.hpp"
#include "wavespin/geometry.hpp"
#include "wavespin/interaction.hpp"
#include "wavespin/io/csv.hpp"
#include "wavespin/io/digest.hpp"
#include "wavespin/io/format.hpp"
#include "wavespin/io/manifest.hpp"
#include "wavespin/io/svg.hpp"
#include "wavespin/parallel.hpp"
#include "wavespin/potential.hpp"
#include "wavespin/quadrature.hpp"
#include "wavespin/residual.hpp"
#include "wavespin/spinor.hpp"
#include "wavespin/state.hpp"
#include "wavespin/topology.hpp"
