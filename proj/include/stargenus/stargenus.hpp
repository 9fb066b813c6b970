#pragma once

#include "stargenus/chords.hpp"
#include "stargenus/circuit.hpp"
#include "stargenus/errors.hpp"
#include "stargenus/fixtures.hpp"
#include "stargenus/genus.hpp"
#include "stargenus/gf2.hpp"
#include "stargenus/graph.hpp"
#include "stargenus/oracle.hpp"
#include "stargenus/parallel.hpp"
#include "stargenus/stg_io.hpp"
