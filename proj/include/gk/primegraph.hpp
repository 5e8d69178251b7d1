#pragma once

#include "gk/primegraph/coclique.hpp"
#include "gk/primegraph/export.hpp"
#include "gk/primegraph/graph.hpp"
#include "gk/primegraph/reproduce.hpp"
