#pragma once

#include "arith.hpp"
#include "block_string.hpp"
#include "canonical.hpp"
#include "certificate.hpp"
#include "chain_graph.hpp"
#include "char_poly.hpp"
#include "error.hpp"
#include "families.hpp"
#include "golden.hpp"
#include "graph.hpp"
#include "matrix.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"
#include "spectrum.hpp"
#include "switching.hpp"
