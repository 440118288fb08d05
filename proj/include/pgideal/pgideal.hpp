#ifndef PGIDEAL_PGIDEAL_HPP
#define PGIDEAL_PGIDEAL_HPP

#include "brieskorn.hpp"
#include "datum_io.hpp"
#include "errors.hpp"
#include "graph_io.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "lattice.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"
#include "rees.hpp"

#endif
