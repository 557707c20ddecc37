// Random valid Pi(Q)-modules for property tests.
//
// A module is drawn by picking a KQ-module x with maps of random rank, then
// a point of the conormal fiber over x.  Every Pi(Q)-module arises this way,
// so the generator reaches all of Lambda(nu); sparse fiber points and duals
// push it off the generic locus.
#pragma once

#include <cstdint>
#include <random>

#include "preproj/pi_module.hpp"

namespace preproj {

struct RandomModuleOptions {
    int max_dim = 3;                  // per vertex
    double sparse_probability = 0.3;  // fiber point from a random subset of a kernel basis
    double dual_probability = 0.3;
};

template <ExactField F>
Matrix<F> random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

// Product of random rows x r and r x cols factors, r uniform in [0, min].
template <ExactField F>
Matrix<F> random_matrix_of_random_rank(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

template <ExactField F>
KQModule<F> random_kq_module(const Quiver& q, const Dims& dims, std::mt19937_64& rng);

template <ExactField F>
PiModule<F> random_pi_module(const Quiver& q, const Dims& dims, std::mt19937_64& rng, const RandomModuleOptions& opt = {});

template <ExactField F>
PiModule<F> random_pi_module(const Quiver& q, std::mt19937_64& rng, const RandomModuleOptions& opt = {});

}  // namespace preproj
