#pragma once

#include "dyadic/step_function.hpp"
#include "dyadic/rng.hpp"
#include "dyadic/report.hpp"
#include "dyadic/lorentz.hpp"
#include "dyadic/dyadic_interval.hpp"
#include "dyadic/haar.hpp"
#include "dyadic/kernels.hpp"
#include "dyadic/cz.hpp"
#include "dyadic/corpus.hpp"
#include "dyadic/experiments.hpp"
#include "dyadic/io.hpp"
#include "dyadic/suites.hpp"
