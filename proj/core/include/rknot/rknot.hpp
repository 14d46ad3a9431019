#pragma once

#include "rknot/angles.hpp"
#include "rknot/cf_abs.hpp"
#include "rknot/cf_pm.hpp"
#include "rknot/chebyshev.hpp"
#include "rknot/diagram.hpp"
#include "rknot/errors.hpp"
#include "rknot/fraction.hpp"
#include "rknot/harmonic.hpp"
#include "rknot/interval.hpp"
#include "rknot/json_io.hpp"
#include "rknot/polynomial.hpp"
#include "rknot/svg.hpp"
#include "rknot/two_bridge.hpp"
#include "rknot/verify.hpp"
