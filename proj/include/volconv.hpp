#pragma once

#include "volconv/basis.hpp"
#include "volconv/convmat.hpp"
#include "volconv/errors.hpp"
#include "volconv/fit.hpp"
#include "volconv/io.hpp"
#include "volconv/laguerre.hpp"
#include "volconv/named_functions.hpp"
#include "volconv/oracle.hpp"
#include "volconv/polyseries.hpp"
#include "volconv/quadrature.hpp"
#include "volconv/random.hpp"
#include "volconv/volterra.hpp"
