#pragma once

#include "kmweyl/cartan.hpp"
#include "kmweyl/catalog.hpp"
#include "kmweyl/checked.hpp"
#include "kmweyl/error.hpp"
#include "kmweyl/polynomial.hpp"
#include "kmweyl/series.hpp"
#include "kmweyl/verify.hpp"
#include "kmweyl/weyl.hpp"
