#pragma once

#include "qts/errors.hpp"
#include "qts/jordan.hpp"
#include "qts/json_io.hpp"
#include "qts/operators.hpp"
#include "qts/qcore.hpp"
#include "qts/qparam.hpp"
#include "qts/rational.hpp"
#include "qts/rational_fn.hpp"
#include "qts/series.hpp"
#include "qts/space.hpp"
#include "qts/stirling.hpp"
