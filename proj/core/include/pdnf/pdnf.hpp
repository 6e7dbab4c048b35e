#pragma once

#include "pdnf/chevalley.hpp"
#include "pdnf/convergence.hpp"
#include "pdnf/eigen.hpp"
#include "pdnf/error.hpp"
#include "pdnf/flow_check.hpp"
#include "pdnf/homological.hpp"
#include "pdnf/matrix.hpp"
#include "pdnf/normal_form.hpp"
#include "pdnf/polynomial.hpp"
#include "pdnf/scalar.hpp"
#include "pdnf/symmetry.hpp"
#include "pdnf/univariate.hpp"
#include "pdnf/vector_field.hpp"
