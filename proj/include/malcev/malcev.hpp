// Umbrella header.
#pragma once

#include "class2.hpp"
#include "coxeter.hpp"
#include "crg.hpp"
#include "dihedral.hpp"
#include "integer_matrix.hpp"
#include "pclie.hpp"
#include "presentation.hpp"
#include "report.hpp"
