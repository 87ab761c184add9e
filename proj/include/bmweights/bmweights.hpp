#pragma once

#include "bmweights/bruteforce.hpp"
#include "bmweights/cycles.hpp"
#include "bmweights/errors.hpp"
#include "bmweights/field.hpp"
#include "bmweights/galois.hpp"
#include "bmweights/hnf.hpp"
#include "bmweights/jh.hpp"
#include "bmweights/json_io.hpp"
#include "bmweights/solver.hpp"
#include "bmweights/specs.hpp"
#include "bmweights/types.hpp"
#include "bmweights/verify.hpp"
#include "bmweights/weights.hpp"
