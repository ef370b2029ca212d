#pragma once

#include "subcomp/cnf.hpp"
#include "subcomp/error.hpp"
#include "subcomp/gadgets.hpp"
#include "subcomp/graph.hpp"
#include "subcomp/graph6.hpp"
#include "subcomp/io.hpp"
#include "subcomp/pattern.hpp"
#include "subcomp/ramsey.hpp"
#include "subcomp/search.hpp"
#include "subcomp/solve.hpp"
#include "subcomp/split.hpp"
#include "subcomp/verify.hpp"
#include "subcomp/vertex_set.hpp"
