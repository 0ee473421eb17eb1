#pragma once

#include "alcove/characters.hpp"
#include "alcove/errors.hpp"
#include "alcove/identities.hpp"
#include "alcove/lattice.hpp"
#include "alcove/levelshift.hpp"
#include "alcove/matrix.hpp"
#include "alcove/parallel.hpp"
#include "alcove/rational.hpp"
#include "alcove/root_system.hpp"
#include "alcove/stabilizers.hpp"
#include "alcove/torus.hpp"
#include "alcove/verify.hpp"
#include "alcove/verlinde.hpp"
#include "alcove/weyl.hpp"
