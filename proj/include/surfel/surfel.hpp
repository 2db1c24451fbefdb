#pragma once

#include "surfel/checks.hpp"
#include "surfel/disk2d.hpp"
#include "surfel/errors.hpp"
#include "surfel/figures.hpp"
#include "surfel/homogenize.hpp"
#include "surfel/linalg.hpp"
#include "surfel/materials.hpp"
#include "surfel/sphere_gm.hpp"
#include "surfel/sphere_so.hpp"
#include "surfel/verify.hpp"
