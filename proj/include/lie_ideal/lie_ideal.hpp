#pragma once

#include "catalog.hpp"
#include "error.hpp"
#include "format.hpp"
#include "ideal.hpp"
#include "io.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "scalar.hpp"
