#pragma once

#include "ihsig/complex/chain.hpp"
#include "ihsig/complex/constructions.hpp"
#include "ihsig/complex/product.hpp"
#include "ihsig/complex/simplex.hpp"
#include "ihsig/complex/simplicial_complex.hpp"
#include "ihsig/complex/homology.hpp"
