#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "abca/blaschke.hpp"
#include "abca/polynomial.hpp"

namespace abca {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// ABC_ANALYTICA_SEED if set, else kDefaultSeed. Throws std::invalid_argument
// unless the variable is a decimal unsigned integer.
std::uint64_t corpus_seed();

// Gaussian rational with |z| <= max_modulus and |z| >= min_modulus,
// both parts with denominator `den`.
GaussianRational random_point(std::mt19937_64& rng, double min_modulus, double max_modulus, int den = 20);

// f_0..f_n with pairwise distinct degrees <= max_degree (hence linearly
// independent). Zeros mostly in |z| <= 0.9, some outside the unit disk,
// occasionally repeated.
std::vector<Polynomial> random_polynomial_system(std::mt19937_64& rng, int n, int max_degree = 8);

// Up to max_zeros zeros in |z| <= max_modulus, multiplicities up to 2.
BlaschkeProduct random_blaschke(std::mt19937_64& rng, int max_zeros, double max_modulus = 0.9);

struct LemmaCase {
  Polynomial f;
  BlaschkeProduct theta;
};

// f of degree <= 4, theta with at most 5 zeros, on the unit disk. The first
// cases have f = 1.
std::vector<LemmaCase> lemma_corpus(std::uint64_t seed, int count = 30);

// Zeros 1 - 2^-k, k = 1..K.
BlaschkeProduct radial_blaschke(int K);

}  // namespace abca
