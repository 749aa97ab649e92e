#pragma once

#include "ihsig/signature/duality.hpp"
#include "ihsig/signature/fundamental_cycle.hpp"
#include "ihsig/signature/symmetric_complex.hpp"
