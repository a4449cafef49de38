#include "pg/arith.hpp"

#include <algorithm>

namespace pg {

long long Factorization::prime_power(int i) const {
    return checked_pow(factors[i].prime, factors[i].exponent);
}

int Factorization::index_of(long long p) const {
    for (int i = 0; i < num_primes(); ++i)
        if (factors[i].prime == p) return i;
    return -1;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("integer overflow in addition");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("integer overflow in multiplication");
    return r;
}

long long checked_pow(long long base, int exp) {
    if (exp < 0) throw DomainError("negative exponent");
    long long r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

namespace {

long long mulmod(long long a, long long b, long long m) {
    return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

long long powmod(long long a, long long e, long long m) {
    long long r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long q : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        if (p % q == 0) return p == q;
    }
    // Miller-Rabin with a witness set that is deterministic for 64-bit inputs.
    long long d = p - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (long long a : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        long long x = powmod(a, d, p);
        if (x == 1 || x == p - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, p);
            if (x == p - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(long long n) {
    if (n < 1) throw DomainError("factorize: argument must be positive");
    Factorization f;
    f.n = n;
    long long rest = n;
    for (long long p = 2; p <= rest / p; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        f.factors.push_back({p, e});
    }
    if (rest > 1) f.factors.push_back({rest, 1});
    return f;
}

long long totient(long long m) {
    if (m < 1) throw DomainError("totient: argument must be positive");
    return totient(factorize(m));
}

long long totient(const Factorization& f) {
    long long r = 1;
    for (const auto& [p, e] : f.factors) {
        r = checked_mul(r, checked_pow(p, e - 1));
        r = checked_mul(r, p - 1);
    }
    return r;
}

int valuation(long long n, long long p) {
    if (n < 1 || p < 2) throw DomainError("valuation: bad arguments");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

RadicalOutcome radical_condition(const std::vector<long long>& primes, RadicalMultiplier mult) {
    if (primes.empty()) throw DomainError("radical_condition: empty prime list");
    long long rad = 1, phi = 1;
    long long prev = 1;
    for (long long p : primes) {
        if (p <= prev) throw DomainError("radical_condition: primes must be strictly ascending");
        if (!is_prime(p)) throw DomainError("radical_condition: " + std::to_string(p) + " is not prime");
        prev = p;
        rad = checked_mul(rad, p);
        phi = checked_mul(phi, p - 1);
    }
    long long m = mult == RadicalMultiplier::Two ? 2 : static_cast<long long>(primes.size()) + 1;
    long long lhs = checked_mul(m, phi);
    if (lhs > rad) return RadicalOutcome::HoldsStrict;
    if (lhs == rad) return RadicalOutcome::HoldsEqual;
    return RadicalOutcome::Fails;
}

bool two_phi_holds(const std::vector<long long>& primes) {
    if (primes.empty()) return true;
    return radical_condition(primes, RadicalMultiplier::Two) != RadicalOutcome::Fails;
}

}  // namespace pg
