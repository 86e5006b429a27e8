#pragma once

#include "wdx/error.hpp"
#include "wdx/bigint.hpp"
#include "wdx/monomial.hpp"
#include "wdx/beta.hpp"
#include "wdx/monomial_set.hpp"
#include "wdx/codeword.hpp"
#include "wdx/weight_enum.hpp"
#include "wdx/orbit.hpp"
#include "wdx/construct.hpp"
#include "wdx/verify.hpp"
#include "wdx/io.hpp"
