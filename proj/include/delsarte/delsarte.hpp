#pragma once

#include "delsarte/density.hpp"
#include "delsarte/error.hpp"
#include "delsarte/extremal.hpp"
#include "delsarte/group.hpp"
#include "delsarte/io.hpp"
#include "delsarte/lattice.hpp"
#include "delsarte/lp.hpp"
#include "delsarte/posdef.hpp"
#include "delsarte/radial.hpp"
#include "delsarte/rng.hpp"
#include "delsarte/special.hpp"
#include "delsarte/suites.hpp"
#include "delsarte/trinomial.hpp"
#include "delsarte/version.hpp"
