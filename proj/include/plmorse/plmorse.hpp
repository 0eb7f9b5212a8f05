#pragma once

#include "plmorse/collapse.hpp"
#include "plmorse/complex.hpp"
#include "plmorse/constructions.hpp"
#include "plmorse/discrete_morse.hpp"
#include "plmorse/finite_groups.hpp"
#include "plmorse/fundamental_group.hpp"
#include "plmorse/homology.hpp"
#include "plmorse/manifold.hpp"
#include "plmorse/mazur.hpp"
#include "plmorse/morse.hpp"
#include "plmorse/quotient_search.hpp"
