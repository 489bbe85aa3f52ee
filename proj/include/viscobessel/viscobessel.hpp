#pragma once

#include "viscobessel/error.hpp"
#include "viscobessel/specfun/gamma.hpp"
#include "viscobessel/specfun/bessel.hpp"
#include "viscobessel/specfun/bessel_ratio.hpp"
#include "viscobessel/specfun/zeros.hpp"
#include "viscobessel/specfun/zero_cache.hpp"
#include "viscobessel/specfun/erfc.hpp"
#include "viscobessel/specfun/mittag_leffler.hpp"
#include "viscobessel/laplace/laplace_function.hpp"
#include "viscobessel/laplace/talbot.hpp"
#include "viscobessel/laplace/stehfest.hpp"
#include "viscobessel/models/params.hpp"
#include "viscobessel/models/fractional_maxwell.hpp"
#include "viscobessel/models/bessel_model.hpp"
#include "viscobessel/models/material_model.hpp"
#include "viscobessel/models/short_time.hpp"
#include "viscobessel/fracsim/load_history.hpp"
#include "viscobessel/fracsim/caputo.hpp"
#include "viscobessel/fracsim/stepping.hpp"
#include "viscobessel/fracsim/convolution.hpp"
#include "viscobessel/fracsim/interconversion.hpp"
#include "viscobessel/io/csv.hpp"
