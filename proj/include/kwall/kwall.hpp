#pragma once

#include "kwall/arrangement.hpp"
#include "kwall/consistency.hpp"
#include "kwall/error.hpp"
#include "kwall/gitwalls.hpp"
#include "kwall/groupoid.hpp"
#include "kwall/invariants.hpp"
#include "kwall/moebius.hpp"
#include "kwall/polynomial.hpp"
#include "kwall/rational.hpp"
#include "kwall/render.hpp"
#include "kwall/serialize.hpp"
#include "kwall/stackalg.hpp"
#include "kwall/wallsets.hpp"
