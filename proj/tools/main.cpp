#include <iostream>

#include "pauli_simplex/cli.hpp"

int main(int argc, char** argv) { return pauli_simplex::cli::run(argc, argv, std::cout, std::cerr); }
