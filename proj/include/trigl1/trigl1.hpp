#pragma once

#include "trigl1/closed_forms.hpp"
#include "trigl1/extremal_signs.hpp"
#include "trigl1/inequalities.hpp"
#include "trigl1/kernels.hpp"
#include "trigl1/l1_oracle.hpp"
#include "trigl1/random_trig.hpp"
#include "trigl1/stechkin.hpp"
#include "trigl1/trig_core.hpp"
