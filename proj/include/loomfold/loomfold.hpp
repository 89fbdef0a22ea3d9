#pragma once

#include "loomfold/core.hpp"
#include "loomfold/lattice_vec.hpp"
#include "loomfold/cartan.hpp"
#include "loomfold/lattice.hpp"
#include "loomfold/weyl.hpp"
#include "loomfold/folding.hpp"
#include "loomfold/characters.hpp"
#include "loomfold/pbw_graph.hpp"
#include "loomfold/qsymbolic.hpp"
#include "loomfold/type_parse.hpp"
#include "loomfold/json_io.hpp"
#include "loomfold/verify.hpp"
