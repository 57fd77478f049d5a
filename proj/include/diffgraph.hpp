#pragma once

#include "diffgraph/bounds.hpp"
#include "diffgraph/catalog.hpp"
#include "diffgraph/classifier.hpp"
#include "diffgraph/embedding.hpp"
#include "diffgraph/error.hpp"
#include "diffgraph/genus.hpp"
#include "diffgraph/graph.hpp"
#include "diffgraph/group.hpp"
#include "diffgraph/group_graphs.hpp"
#include "diffgraph/harness.hpp"
#include "diffgraph/io.hpp"
#include "diffgraph/isomorphism.hpp"
#include "diffgraph/planarity.hpp"
#include "diffgraph/reduction.hpp"
#include "diffgraph/search.hpp"
