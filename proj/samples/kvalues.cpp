// Prints k_i(a) and its factorization for a small range of bases.

#include <iostream>

#include "gk/arith.hpp"

int main() {
    for (long a : {-5L, 2L, 5L, 19L})
        for (long i = 3; i <= 10; ++i) {
            const gk::Int k = gk::arith::k_value(i, a);
            std::cout << "k_" << i << "(" << a << ") = " << k;
            if (k > 1) std::cout << " = " << gk::arith::factorize(k).to_string();
            std::cout << '\n';
        }
}
