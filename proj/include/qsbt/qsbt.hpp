#pragma once

#include "bargmann.hpp"
#include "coeff_io.hpp"
#include "errors.hpp"
#include "fock_space.hpp"
#include "hermite.hpp"
#include "qfourier.hpp"
#include "quadrature.hpp"
#include "quaternion.hpp"
#include "slice_series.hpp"
#include "tables.hpp"
