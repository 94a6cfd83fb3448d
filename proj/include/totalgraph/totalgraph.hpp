// Umbrella header for the whole library.
#pragma once

#include "totalgraph/analysis.hpp"
#include "totalgraph/cliques.hpp"
#include "totalgraph/constructors.hpp"
#include "totalgraph/graph.hpp"
#include "totalgraph/io.hpp"
#include "totalgraph/isomorphism.hpp"
#include "totalgraph/oracle.hpp"
#include "totalgraph/random_graphs.hpp"
#include "totalgraph/recognition.hpp"
#include "totalgraph/selftest.hpp"
