#pragma once

// Umbrella header for the qvbs library.

#include "qvbs/algebra.hpp"
#include "qvbs/budget.hpp"
#include "qvbs/cg.hpp"
#include "qvbs/errors.hpp"
#include "qvbs/exact_matrix.hpp"
#include "qvbs/laurent.hpp"
#include "qvbs/mps.hpp"
#include "qvbs/qnum.hpp"
#include "qvbs/ratq.hpp"
#include "qvbs/sitepoly.hpp"
#include "qvbs/state.hpp"
#include "qvbs/surd.hpp"
#include "qvbs/transfer.hpp"
#include "qvbs/vbs.hpp"
#include "qvbs/weyl.hpp"
