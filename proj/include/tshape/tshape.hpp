// Umbrella header for the whole library.
#pragma once

#include "tshape/block.hpp"
#include "tshape/blowup.hpp"
#include "tshape/calculus.hpp"
#include "tshape/census.hpp"
#include "tshape/equation.hpp"
#include "tshape/io.hpp"
#include "tshape/normal_form.hpp"
#include "tshape/shape.hpp"
