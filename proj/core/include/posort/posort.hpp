#pragma once

#include "posort/chain_merge.hpp"
#include "posort/convex_flow.hpp"
#include "posort/entropy.hpp"
#include "posort/mupi.hpp"
#include "posort/oracle.hpp"
#include "posort/poset.hpp"
#include "posort/poset_io.hpp"
#include "posort/sorters.hpp"
#include "posort/types.hpp"
#include "posort/verify.hpp"
