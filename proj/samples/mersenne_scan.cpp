// Mersenne primes q = 2^k - 1 with k <= 200 and whether q^2 - q + 1 is prime.

#include <iostream>

#include "gk/mersenne.hpp"

int main() {
    const auto recs = gk::mersenne::scan(200);
    std::cout << gk::mersenne::to_json(recs, 200).dump(2) << '\n';
}
