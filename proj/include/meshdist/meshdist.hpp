// Umbrella header: the whole library.
#ifndef MESHDIST_MESHDIST_HPP
#define MESHDIST_MESHDIST_HPP

#include "meshdist/bijection.hpp"
#include "meshdist/catalog.hpp"
#include "meshdist/equidist.hpp"
#include "meshdist/formulas.hpp"
#include "meshdist/ints.hpp"
#include "meshdist/mesh_pattern.hpp"
#include "meshdist/oracle.hpp"
#include "meshdist/permutation.hpp"
#include "meshdist/series.hpp"
#include "meshdist/tables.hpp"
#include "meshdist/verify.hpp"

#endif  // MESHDIST_MESHDIST_HPP
