#pragma once

#include "ihsig/ih/ic_complex.hpp"
#include "ihsig/ih/ih.hpp"
