#pragma once

// Umbrella header for the qsr library: binary qualitative spatio-temporal
// calculi, relation-algebra axiom analysis, algebraic closure and
// information-content metrics.

#include "qsr/aclosure.hpp"
#include "qsr/axioms.hpp"
#include "qsr/builtins.hpp"
#include "qsr/calculus.hpp"
#include "qsr/errors.hpp"
#include "qsr/io.hpp"
#include "qsr/metrics.hpp"
#include "qsr/model.hpp"
#include "qsr/model_checker.hpp"
#include "qsr/network.hpp"
#include "qsr/parallel.hpp"
#include "qsr/relation.hpp"
#include "qsr/report_json.hpp"
