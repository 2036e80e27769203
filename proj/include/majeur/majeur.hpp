// majeur.hpp — umbrella header

#pragma once

#include "majeur/density.hpp"
#include "majeur/eig.hpp"
#include "majeur/errors.hpp"
#include "majeur/fock.hpp"
#include "majeur/linalg.hpp"
#include "majeur/qinfo.hpp"
#include "majeur/sweep.hpp"
#include "majeur/witness.hpp"
