#pragma once

#include "dihom/chains.hpp"
#include "dihom/concepts.hpp"
#include "dihom/digraph.hpp"
#include "dihom/echelon.hpp"
#include "dihom/errors.hpp"
#include "dihom/field.hpp"
#include "dihom/graded.hpp"
#include "dihom/homology.hpp"
#include "dihom/matrix.hpp"
#include "dihom/parallel.hpp"
#include "dihom/relation.hpp"
#include "dihom/space.hpp"
#include "dihom/models.hpp"
#include "dihom/document.hpp"
#include "dihom/report.hpp"
