#pragma once

#include "uppertail/bigint.hpp"
#include "uppertail/errors.hpp"
#include "uppertail/family.hpp"
#include "uppertail/graph.hpp"
#include "uppertail/indpoly.hpp"
#include "uppertail/io.hpp"
#include "uppertail/mc.hpp"
#include "uppertail/rate.hpp"
#include "uppertail/varprob.hpp"
