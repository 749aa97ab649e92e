#pragma once

#include "ihsig/pseudomanifold/checks.hpp"
#include "ihsig/pseudomanifold/orientation.hpp"
#include "ihsig/pseudomanifold/stratification.hpp"
