#include <cstdlib>
#include <iostream>

#include "propchoose/acceptance.hpp"

int main(int argc, char** argv) {
    propchoose::AcceptanceOptions opts;
    if (argc > 1) opts.jobs = std::atoi(argv[1]);
    if (opts.jobs < 1) opts.jobs = 1;
    return propchoose::run_acceptance(std::cout, opts) ? 0 : 1;
}
