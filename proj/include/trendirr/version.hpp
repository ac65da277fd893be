#pragma once

#define TRENDIRR_VERSION "0.1.0"
