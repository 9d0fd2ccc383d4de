#pragma once

#include "nonufd/axioms.hpp"
#include "nonufd/element.hpp"
#include "nonufd/errors.hpp"
#include "nonufd/expr.hpp"
#include "nonufd/factor.hpp"
#include "nonufd/poly.hpp"
#include "nonufd/registry.hpp"
#include "nonufd/s0.hpp"
#include "nonufd/semiring.hpp"
#include "nonufd/semirings.hpp"
#include "nonufd/theorem.hpp"
#include "nonufd/verdict.hpp"
