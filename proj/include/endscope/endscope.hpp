// endscope.hpp — umbrella header.
#pragma once

#include "endscope/carrier.hpp"
#include "endscope/cuts.hpp"
#include "endscope/ends.hpp"
#include "endscope/errors.hpp"
#include "endscope/gallery/registry.hpp"
#include "endscope/lazy_graph.hpp"
#include "endscope/maxflow.hpp"
#include "endscope/oracle.hpp"
#include "endscope/qi.hpp"
#include "endscope/rays.hpp"
#include "endscope/report.hpp"
#include "endscope/rng.hpp"
#include "endscope/vertex.hpp"
#include "endscope/walk.hpp"
#include "endscope/window.hpp"
#include "endscope/word.hpp"
