#pragma once

#include <cstdint>
#include <vector>

#include "pg/errors.hpp"

namespace pg {

struct PrimePower {
    long long prime;
    int exponent;
    bool operator==(const PrimePower&) const = default;
};

// Prime factorization with primes in strictly increasing order.
struct Factorization {
    long long n = 1;
    std::vector<PrimePower> factors;

    int num_primes() const { return static_cast<int>(factors.size()); }
    long long prime(int i) const { return factors[i].prime; }
    int exponent(int i) const { return factors[i].exponent; }
    // p_i^{a_i}
    long long prime_power(int i) const;
    // Index of p in the factor list, or -1.
    int index_of(long long p) const;
    bool operator==(const Factorization&) const = default;
};

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);
long long checked_pow(long long base, int exp);

// Deterministic for all 64-bit inputs.
bool is_prime(long long p);

// Trial division; sized for group orders at desk scale.
Factorization factorize(long long n);

// Euler totient.
long long totient(long long m);
long long totient(const Factorization& f);

// p-adic valuation v_p(n).
int valuation(long long n, long long p);

enum class RadicalMultiplier { Two, RPlusOne };
enum class RadicalOutcome { HoldsStrict, HoldsEqual, Fails };

// Compares m * phi(p_1...p_k) with p_1...p_k for a strictly ascending list of
// primes, where m is 2 or (k+1).  Exact arithmetic; the list must be nonempty.
RadicalOutcome radical_condition(const std::vector<long long>& primes, RadicalMultiplier mult);

// Convenience: the "2*phi(prod) >= prod" test used throughout the degree
// formulas.  Holds vacuously for the empty list.
bool two_phi_holds(const std::vector<long long>& primes);

}  // namespace pg
