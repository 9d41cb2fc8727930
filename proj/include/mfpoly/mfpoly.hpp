#pragma once

// Umbrella header.

#include "mfpoly/combinatorics.hpp"
#include "mfpoly/direct.hpp"
#include "mfpoly/errors.hpp"
#include "mfpoly/eval.hpp"
#include "mfpoly/gaussian.hpp"
#include "mfpoly/io.hpp"
#include "mfpoly/lambda_poly.hpp"
#include "mfpoly/laurent.hpp"
#include "mfpoly/rational.hpp"
#include "mfpoly/real_form.hpp"
#include "mfpoly/verify.hpp"
