#pragma once

#include "edgeideal/vertex_set.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/canonical.hpp"
#include "edgeideal/constructions.hpp"
#include "edgeideal/covers.hpp"
#include "edgeideal/complex.hpp"
#include "edgeideal/field.hpp"
#include "edgeideal/linalg.hpp"
#include "edgeideal/homology.hpp"
#include "edgeideal/decomposability.hpp"
#include "edgeideal/betti.hpp"
#include "edgeideal/json_io.hpp"
#include "edgeideal/census.hpp"
#include "edgeideal/verify.hpp"
