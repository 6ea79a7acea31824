#pragma once

#include "arith.hpp"
#include "bound_pipeline.hpp"
#include "dirichlet.hpp"
#include "discriminant.hpp"
#include "error.hpp"
#include "galois_models.hpp"
#include "hilbert.hpp"
#include "kronecker.hpp"
#include "poly.hpp"
#include "quadform.hpp"
#include "sieve.hpp"
