#pragma once

#include "gudg/assembler.hpp"
#include "gudg/catalog.hpp"
#include "gudg/core.hpp"
#include "gudg/gadgets.hpp"
#include "gudg/generator.hpp"
#include "gudg/geom_graph.hpp"
#include "gudg/graph.hpp"
#include "gudg/graph_io.hpp"
#include "gudg/mdim.hpp"
#include "gudg/orthodraw.hpp"
#include "gudg/sat3.hpp"
#include "gudg/shorten.hpp"
#include "gudg/svg.hpp"
#include "gudg/verify.hpp"
