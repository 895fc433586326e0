#pragma once

#include "lfds/bounds.hpp"
#include "lfds/errors.hpp"
#include "lfds/factor.hpp"
#include "lfds/harness.hpp"
#include "lfds/height.hpp"
#include "lfds/io.hpp"
#include "lfds/matrix.hpp"
#include "lfds/numeric.hpp"
#include "lfds/oracle.hpp"
#include "lfds/snf.hpp"
#include "lfds/system.hpp"
#include "lfds/verify.hpp"
