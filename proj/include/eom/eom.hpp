#pragma once

#include "eom/bessel.hpp"
#include "eom/detection.hpp"
#include "eom/dynamics.hpp"
#include "eom/errors.hpp"
#include "eom/numkernel.hpp"
#include "eom/su2_model.hpp"
#include "eom/unrestricted.hpp"
#include "eom/wigner.hpp"
