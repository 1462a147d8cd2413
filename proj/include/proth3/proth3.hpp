#pragma once

#include "proth3/error.hpp"
#include "proth3/natural.hpp"
#include "proth3/modular.hpp"
#include "proth3/oracle.hpp"
#include "proth3/factorization.hpp"
#include "proth3/proth_candidate.hpp"
#include "proth3/fermat_factors.hpp"
#include "proth3/proth_ext.hpp"
#include "proth3/search.hpp"
#include "proth3/record.hpp"
#include "proth3/verify.hpp"
