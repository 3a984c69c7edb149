#pragma once

#include "errors.hpp"
#include "numerics.hpp"
#include "jet.hpp"
#include "root_systems.hpp"
#include "theta.hpp"
#include "transforms.hpp"
#include "densities.hpp"
#include "geometry.hpp"
#include "spectral.hpp"
#include "table.hpp"
#include "verify.hpp"
#include "cli.hpp"
