// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include "exparts/claims_audit.hpp"
#include "exparts/distributions.hpp"
#include "exparts/enumerate.hpp"
#include "exparts/group_indexing.hpp"
#include "exparts/integer_partition.hpp"
#include "exparts/model_params.hpp"
#include "exparts/oracle.hpp"
#include "exparts/permutation.hpp"
#include "exparts/prob_value.hpp"
#include "exparts/rational.hpp"
#include "exparts/rng.hpp"
#include "exparts/samplers.hpp"
#include "exparts/seating_tree.hpp"
#include "exparts/set_partition.hpp"
#include "exparts/verify.hpp"
