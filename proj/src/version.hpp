#pragma once

#define TROPGW_VERSION_STRING "0.1.0"
