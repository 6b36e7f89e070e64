#pragma once

#include "cramer/cramer.hpp"
#include "cramer/errors.hpp"
#include "cramer/involution.hpp"
#include "cramer/io.hpp"
#include "cramer/oracle.hpp"
#include "cramer/perm.hpp"
#include "cramer/polynomial.hpp"
#include "cramer/rational.hpp"
#include "cramer/system.hpp"
