// Prints the least quadratic non-residue and the longest residue/non-residue
// runs for a few primes, then the smallest non-square modulo 1+2i.

#include <iostream>

#include "powres/powres.hpp"

int main() {
    using namespace powres;
    for (std::int64_t p : {7, 13, 23, 71, 409}) {
        RunStats s = run_stats(p, 2);
        std::cout << "p=" << p << "  n2=" << *s.n << "  R2=" << s.R << "  N2=" << *s.N << '\n';
    }

    RingSpec gaussian(-1);
    QuadInt pi{gaussian, 1, 2};
    QuadInt omega = minimal_nonresidue(pi, 2);
    std::cout << "least-norm non-square mod " << pi << ": " << omega << " (norm " << qi_norm(omega) << ")\n";
}
