#pragma once

#include "ihsig/perversity/perversity.hpp"
#include "ihsig/perversity/product_stratification.hpp"
