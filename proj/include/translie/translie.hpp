#pragma once

#include "translie/scalar.hpp"
#include "translie/basis.hpp"
#include "translie/element.hpp"
#include "translie/window.hpp"
#include "translie/linear_system.hpp"
#include "translie/functional.hpp"
#include "translie/bracket.hpp"
#include "translie/product.hpp"
#include "translie/operators.hpp"
#include "translie/identity_lab.hpp"
#include "translie/derivation_solver.hpp"
#include "translie/tp_params.hpp"
#include "translie/tp_structures.hpp"
