#ifndef GPGCD_GPGCD_HPP
#define GPGCD_GPGCD_HPP

#include "gpgcd/benchmark.hpp"
#include "gpgcd/extract.hpp"
#include "gpgcd/generator.hpp"
#include "gpgcd/numeric_kernel.hpp"
#include "gpgcd/polynomial.hpp"
#include "gpgcd/problem_io.hpp"
#include "gpgcd/solver.hpp"
#include "gpgcd/sylvester.hpp"

#endif
