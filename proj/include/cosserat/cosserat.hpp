#pragma once

#include "cosserat/core.hpp"
#include "cosserat/tensor.hpp"
#include "cosserat/kinematics.hpp"
#include "cosserat/acoustic.hpp"
#include "cosserat/stability.hpp"
#include "cosserat/symbol.hpp"
#include "cosserat/antiplane.hpp"
#include "cosserat/discontinuity.hpp"
#include "cosserat/material_io.hpp"
#include "cosserat/exports.hpp"
