#pragma once

#include "gencx/autodiff.hpp"
#include "gencx/dual.hpp"
#include "gencx/dual_format.hpp"
#include "gencx/dual_forms.hpp"
#include "gencx/dual_math.hpp"
#include "gencx/error.hpp"
#include "gencx/gc_number.hpp"
