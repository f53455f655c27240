#ifndef KNOTINV_KNOTINV_HPP
#define KNOTINV_KNOTINV_HPP

#include "knotinv/diagram.hpp"
#include "knotinv/error.hpp"
#include "knotinv/invariants.hpp"
#include "knotinv/laurent.hpp"
#include "knotinv/poly_text.hpp"
#include "knotinv/records.hpp"
#include "knotinv/report.hpp"
#include "knotinv/state_sum.hpp"
#include "knotinv/tangle.hpp"
#include "knotinv/turaev.hpp"

#endif  // KNOTINV_KNOTINV_HPP
