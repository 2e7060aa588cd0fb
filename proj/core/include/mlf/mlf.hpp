#pragma once

#include "mlf/asymptotic.hpp"
#include "mlf/contour.hpp"
#include "mlf/dispatch.hpp"
#include "mlf/errors.hpp"
#include "mlf/pade.hpp"
#include "mlf/quadrature.hpp"
#include "mlf/rational.hpp"
#include "mlf/result.hpp"
#include "mlf/scalar.hpp"
#include "mlf/series.hpp"
