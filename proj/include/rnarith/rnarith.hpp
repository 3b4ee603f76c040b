// Everything in one include.
#pragma once

#include "rnarith/dyadic.hpp"
#include "rnarith/fixed_arith.hpp"
#include "rnarith/float_arith.hpp"
#include "rnarith/float_format.hpp"
#include "rnarith/rn_fixed.hpp"
