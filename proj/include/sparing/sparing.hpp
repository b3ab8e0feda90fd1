#pragma once

#include "sparing/graph.hpp"
#include "sparing/set_labels.hpp"
#include "sparing/oracle.hpp"
#include "sparing/formulas.hpp"
#include "sparing/constructions.hpp"
#include "sparing/compare.hpp"
#include "sparing/io.hpp"
