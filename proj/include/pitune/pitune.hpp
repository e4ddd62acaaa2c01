#pragma once

#include "pitune/errors.hpp"
#include "pitune/freqdomain.hpp"
#include "pitune/loop.hpp"
#include "pitune/model.hpp"
#include "pitune/polynomial.hpp"
#include "pitune/roots.hpp"
#include "pitune/timedomain.hpp"
#include "pitune/transfer_function.hpp"
