#pragma once

#include "starkit/bitset.hpp"
#include "starkit/cuts.hpp"
#include "starkit/errors.hpp"
#include "starkit/formulas.hpp"
#include "starkit/graph.hpp"
#include "starkit/graph_io.hpp"
#include "starkit/iso.hpp"
#include "starkit/oracle.hpp"
#include "starkit/perm.hpp"
#include "starkit/report.hpp"
#include "starkit/split.hpp"
