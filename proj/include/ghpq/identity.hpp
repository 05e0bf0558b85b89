#pragma once

#include "ghpq/identity/audit.hpp"
#include "ghpq/identity/catalog.hpp"
#include "ghpq/identity/checks.hpp"
#include "ghpq/identity/repair.hpp"
#include "ghpq/identity/report.hpp"
