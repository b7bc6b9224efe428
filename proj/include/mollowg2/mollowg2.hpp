#pragma once

#include "mollowg2/averaging.hpp"
#include "mollowg2/bands.hpp"
#include "mollowg2/cloud.hpp"
#include "mollowg2/correlation.hpp"
#include "mollowg2/drive.hpp"
#include "mollowg2/geometry.hpp"
#include "mollowg2/intensity.hpp"
#include "mollowg2/observables.hpp"
#include "mollowg2/quadrature.hpp"
#include "mollowg2/sine_integral.hpp"
#include "mollowg2/vec3.hpp"
#include "mollowg2/version.hpp"
