#pragma once

#include "cumres/quadrature.hpp"
#include "cumres/special.hpp"
#include "cumres/distribution.hpp"
#include "cumres/report.hpp"
#include "cumres/measures.hpp"
#include "cumres/dynamic.hpp"
#include "cumres/interval.hpp"
#include "cumres/orders.hpp"
#include "cumres/catalog.hpp"
#include "cumres/registry.hpp"
