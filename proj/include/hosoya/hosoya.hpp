#pragma once

// Everything at once.

#include "hosoya/bigint.hpp"
#include "hosoya/closed_forms.hpp"
#include "hosoya/error.hpp"
#include "hosoya/families.hpp"
#include "hosoya/fibonacci.hpp"
#include "hosoya/graph.hpp"
#include "hosoya/matrix.hpp"
#include "hosoya/polynomial.hpp"
#include "hosoya/spectra.hpp"
#include "hosoya/triangle.hpp"
#include "hosoya/verify.hpp"
