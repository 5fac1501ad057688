#pragma once

// Everything except io.hpp and cache.hpp, which also need nlohmann/json.

#include "wonderful/bruhat.hpp"
#include "wonderful/cells.hpp"
#include "wonderful/closure.hpp"
#include "wonderful/cosets.hpp"
#include "wonderful/error.hpp"
#include "wonderful/format.hpp"
#include "wonderful/oracle.hpp"
#include "wonderful/pieces.hpp"
#include "wonderful/root_system.hpp"
#include "wonderful/subset.hpp"
#include "wonderful/twist.hpp"
#include "wonderful/twisted_order.hpp"
#include "wonderful/verify.hpp"
#include "wonderful/weyl.hpp"
