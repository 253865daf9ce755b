#pragma once

#include "maxcross/analysis.hpp"
#include "maxcross/constructions.hpp"
#include "maxcross/enumerate.hpp"
#include "maxcross/errors.hpp"
#include "maxcross/formulas.hpp"
#include "maxcross/geometry.hpp"
#include "maxcross/graph.hpp"
#include "maxcross/io.hpp"
#include "maxcross/sampling.hpp"
#include "maxcross/search.hpp"
#include "maxcross/svg.hpp"
#include "maxcross/table.hpp"
