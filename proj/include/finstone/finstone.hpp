#pragma once

#include "finstone/error.hpp"
#include "finstone/matrix.hpp"
#include "finstone/snf.hpp"
#include "finstone/order/poset.hpp"
#include "finstone/order/incidence.hpp"
#include "finstone/order/generate.hpp"
#include "finstone/lattice/lattice.hpp"
#include "finstone/sites/site.hpp"
#include "finstone/motives/abgroup.hpp"
#include "finstone/motives/motives.hpp"
#include "finstone/profinite/profinite.hpp"
#include "finstone/profinite/partitions.hpp"
#include "finstone/ktheory/ktheory.hpp"
#include "finstone/scissors/grid.hpp"
