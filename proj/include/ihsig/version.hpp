#pragma once

#define IHSIG_VERSION "0.3.0"
