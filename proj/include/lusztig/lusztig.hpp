#pragma once

#include "lusztig/cartan.hpp"
#include "lusztig/conemat.hpp"
#include "lusztig/error.hpp"
#include "lusztig/int_matrix.hpp"
#include "lusztig/lifting.hpp"
#include "lusztig/tropical.hpp"
#include "lusztig/verify.hpp"
#include "lusztig/weyl.hpp"
