#pragma once

#include "error.hpp"
#include "lattice.hpp"
#include "polynomial.hpp"
#include "seed.hpp"
#include "toric_model.hpp"
#include "syz_base.hpp"
#include "skeleton.hpp"
#include "local_system.hpp"
#include "almost_toric.hpp"
#include "svg.hpp"
#include "json_io.hpp"
#include "random.hpp"
#include "verify.hpp"
