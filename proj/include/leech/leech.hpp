#pragma once

#include "leech/abelian.hpp"
#include "leech/complexes.hpp"
#include "leech/cyclic_monoid.hpp"
#include "leech/engine.hpp"
#include "leech/error.hpp"
#include "leech/free_resolution.hpp"
#include "leech/int_matrix.hpp"
#include "leech/integers.hpp"
#include "leech/leech_module.hpp"
#include "leech/module_io.hpp"
#include "leech/render.hpp"
#include "leech/smith.hpp"
#include "leech/trace_maps.hpp"
#include "leech/validation.hpp"
