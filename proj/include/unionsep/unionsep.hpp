#pragma once

#include "choosability.hpp"
#include "color_set.hpp"
#include "constructions.hpp"
#include "discharge_audit.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "rational.hpp"
#include "reducibility.hpp"
#include "separation.hpp"
#include "solver.hpp"
#include "sparsity.hpp"
