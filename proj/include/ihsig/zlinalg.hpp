#pragma once

#include "ihsig/zlinalg/dense.hpp"
#include "ihsig/zlinalg/echelon.hpp"
#include "ihsig/zlinalg/homology.hpp"
#include "ihsig/zlinalg/scalar.hpp"
#include "ihsig/zlinalg/smith.hpp"
#include "ihsig/zlinalg/solve.hpp"
#include "ihsig/zlinalg/sparse.hpp"
