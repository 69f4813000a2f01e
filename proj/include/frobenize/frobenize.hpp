#pragma once

#include "errors.hpp"
#include "integer.hpp"
#include "poly.hpp"
#include "ratfun.hpp"
#include "roots.hpp"
#include "fp.hpp"
#include "diffop.hpp"
#include "local.hpp"
#include "parser.hpp"
#include "families.hpp"
#include "rigidity.hpp"
#include "primes.hpp"
#include "series.hpp"
#include "certifier.hpp"
