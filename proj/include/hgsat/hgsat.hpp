#pragma once

#include "hgsat/bitset.hpp"
#include "hgsat/bounds.hpp"
#include "hgsat/cliques.hpp"
#include "hgsat/constructions.hpp"
#include "hgsat/graph.hpp"
#include "hgsat/hypergraph.hpp"
#include "hgsat/io.hpp"
#include "hgsat/rational.hpp"
#include "hgsat/saturation.hpp"
#include "hgsat/search.hpp"
