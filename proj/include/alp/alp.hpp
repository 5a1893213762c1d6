#pragma once

#include "alp/causal.hpp"
#include "alp/core.hpp"
#include "alp/format.hpp"
#include "alp/graph.hpp"
#include "alp/intervention.hpp"
#include "alp/io.hpp"
#include "alp/parser.hpp"
#include "alp/principles.hpp"
#include "alp/semantics.hpp"
