#pragma once

#include "oft/cft.hpp"
#include "oft/compose_spec.hpp"
#include "oft/field.hpp"
#include "oft/lti.hpp"
#include "oft/octonion.hpp"
#include "oft/of3b.hpp"
#include "oft/partial.hpp"
#include "oft/quad_complex.hpp"
#include "oft/quadrature.hpp"
#include "oft/random.hpp"
#include "oft/theorems.hpp"
#include "oft/transform.hpp"
