#pragma once

#include "body.hpp"
#include "functionals.hpp"
#include "geometry.hpp"
#include "json_io.hpp"
#include "mixed_volume.hpp"
#include "nelder_mead.hpp"
#include "orlicz_add.hpp"
#include "orlicz_fn.hpp"
#include "petty.hpp"
#include "quadrature.hpp"
#include "rootfind.hpp"
#include "sphere_grid.hpp"
