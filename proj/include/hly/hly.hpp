#pragma once

#include "hly/axioms.hpp"
#include "hly/catalog.hpp"
#include "hly/constructions.hpp"
#include "hly/document.hpp"
#include "hly/error.hpp"
#include "hly/field.hpp"
#include "hly/report.hpp"
#include "hly/superspace.hpp"
#include "hly/sweep.hpp"
#include "hly/tensorops.hpp"
