#ifndef LIEXT_LIEXT_HPP
#define LIEXT_LIEXT_HPP

#include "liext/bilinear.hpp"
#include "liext/cohomology.hpp"
#include "liext/complex_structure.hpp"
#include "liext/extension.hpp"
#include "liext/lie_algebra.hpp"
#include "liext/linalg.hpp"
#include "liext/matrix.hpp"
#include "liext/rational.hpp"
#include "liext/serialization.hpp"
#include "liext/solver.hpp"
#include "liext/tables.hpp"
#include "liext/witness_corpus.hpp"

#endif
