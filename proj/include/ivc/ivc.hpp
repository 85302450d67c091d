#pragma once

#include "ivc/bounds.hpp"
#include "ivc/coloring.hpp"
#include "ivc/construction.hpp"
#include "ivc/graph.hpp"
#include "ivc/io.hpp"
#include "ivc/search.hpp"
