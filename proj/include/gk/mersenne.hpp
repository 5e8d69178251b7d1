#pragma once

#include "gk/mersenne/mersenne.hpp"
