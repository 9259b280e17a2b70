#pragma once

#include "sl3kl/arith.hpp"
#include "sl3kl/cyclotomic.hpp"
#include "sl3kl/divisor.hpp"
#include "sl3kl/expsum.hpp"
#include "sl3kl/matrix.hpp"
#include "sl3kl/oracle.hpp"
#include "sl3kl/parallel.hpp"
#include "sl3kl/strata.hpp"
#include "sl3kl/sums.hpp"
