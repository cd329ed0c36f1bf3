#pragma once

#include "measlat/canonical.hpp"
#include "measlat/catalog.hpp"
#include "measlat/error.hpp"
#include "measlat/groebner.hpp"
#include "measlat/hull.hpp"
#include "measlat/inclusion_exclusion.hpp"
#include "measlat/lattice.hpp"
#include "measlat/lattice_io.hpp"
#include "measlat/linalg.hpp"
#include "measlat/measures.hpp"
#include "measlat/spectrum.hpp"
