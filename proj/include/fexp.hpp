#ifndef FEXP_HPP_
#define FEXP_HPP_

#include "fexp/bitset.hpp"
#include "fexp/cayley.hpp"
#include "fexp/closure.hpp"
#include "fexp/error.hpp"
#include "fexp/expansion.hpp"
#include "fexp/fixtures.hpp"
#include "fexp/fwedge.hpp"
#include "fexp/group.hpp"
#include "fexp/io.hpp"
#include "fexp/monoid.hpp"
#include "fexp/partial_action.hpp"
#include "fexp/report.hpp"
#include "fexp/semilattice.hpp"
#include "fexp/suites.hpp"
#include "fexp/verify.hpp"
#include "fexp/wedge.hpp"

#endif  // FEXP_HPP_
