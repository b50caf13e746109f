#pragma once

#include "anf.hpp"
#include "boolean_function.hpp"
#include "catalog.hpp"
#include "classify.hpp"
#include "common.hpp"
#include "gf2n.hpp"
#include "linear_space.hpp"
#include "metrics.hpp"
#include "oracle.hpp"
#include "report.hpp"
#include "scan.hpp"
#include "vectorial.hpp"
#include "verify.hpp"
#include "walsh.hpp"
