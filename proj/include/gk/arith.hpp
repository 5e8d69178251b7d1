#pragma once

#include "gk/arith/cyclotomic.hpp"
#include "gk/arith/factor.hpp"
#include "gk/arith/numtheory.hpp"
#include "gk/arith/primality.hpp"
