#pragma once

#include "minwin/catalog.hpp"
#include "minwin/counting.hpp"
#include "minwin/dimension.hpp"
#include "minwin/errors.hpp"
#include "minwin/games.hpp"
#include "minwin/oracle.hpp"
#include "minwin/polya.hpp"
#include "minwin/series.hpp"
