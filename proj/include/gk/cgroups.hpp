#pragma once

#include "gk/cgroups/attributes.hpp"
#include "gk/cgroups/group_spec.hpp"
#include "gk/cgroups/table_data.hpp"
#include "gk/cgroups/tables.hpp"
