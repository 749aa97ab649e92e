#pragma once

#include "ihsig/ipwitt/ip_witt.hpp"
