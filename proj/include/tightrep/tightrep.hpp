#pragma once

#include "tightrep/element_set.hpp"
#include "tightrep/error.hpp"
#include "tightrep/lattice.hpp"
#include "tightrep/representation.hpp"
#include "tightrep/inverse_semigroup.hpp"
#include "tightrep/enumeration.hpp"
#include "tightrep/structure_file.hpp"
#include "tightrep/commands.hpp"
