#pragma once

#include "gk/ledger/catalogue.hpp"
#include "gk/ledger/checks.hpp"
#include "gk/ledger/claim.hpp"
#include "gk/ledger/expr.hpp"
