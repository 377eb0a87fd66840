#pragma once

// Umbrella header: exact Mukai-lattice arithmetic for Picard-rank-1 abelian
// and K3 surfaces, the lattice action of Fourier-Mukai transforms, and the
// moduli-isomorphism decision procedures built on them.

#include "mukai/types.hpp"
#include "mukai/surface.hpp"
#include "mukai/mukai_vector.hpp"
#include "mukai/vector_io.hpp"
#include "mukai/int_matrix.hpp"
#include "mukai/fm_abelian.hpp"
#include "mukai/fm_general.hpp"
#include "mukai/catalog.hpp"
#include "mukai/paper_checks.hpp"
